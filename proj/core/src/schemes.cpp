#include "jscc/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace jscc {

double uncoded_distortion(const SourceModel& model, const ChannelSpec& channel) {
    return analog_params(model, channel, Allocation{1.0, channel.p}).d_star;
}

double naive_dpc_distortion(const SourceModel& model, const ChannelSpec& channel) {
    return model.sigma_v2 / (1.0 + channel.p / channel.n_design);
}

double digital_dpc_distortion(const SourceModel& model, const ChannelSpec& channel,
                              const Allocation& alloc) {
    const double d_star = analog_params(model, channel, alloc).d_star;
    return d_star / (1.0 + (channel.p - alloc.pa) / channel.n_design);
}

double hda_distortion(const SourceModel& model, const ChannelSpec& channel,
                      const Allocation& alloc) {
    if (!channel.matched()) {
        throw std::domain_error("hda_distortion requires matched noise");
    }
    const double d_star = analog_params(model, channel, alloc).d_star;
    const auto coeffs = hda_coefficients(model, channel, alloc, d_star);
    if (coeffs.p_h <= 0.0) return d_star;  // no digital refinement
    const auto m = moment_set(model, channel, alloc, coeffs);
    const double det = m.e_u2 * m.e_y2 - m.e_uy * m.e_uy;
    const double quad = (m.e_vu * m.e_vu * m.e_y2 - 2.0 * m.e_vu * m.e_vy * m.e_uy +
                         m.e_vy * m.e_vy * m.e_u2) /
                        det;
    return model.sigma_v2 - quad;
}

SchemeResult optimize_scheme(const SourceModel& model, const ChannelSpec& channel,
                             Scheme scheme) {
    return optimize_scheme(model, channel, scheme,
                           default_grid_2d(0.0, channel.p, 0.0, 1.0));
}

SchemeResult optimize_scheme(const SourceModel& model, const ChannelSpec& channel,
                             Scheme scheme, const GridSpec& spec) {
    if (scheme == Scheme::Uncoded) {
        Allocation alloc{1.0, channel.p};
        return SchemeResult{scheme,
                            DistortionPoint{alloc, uncoded_distortion(model, channel), scheme},
                            {},
                            true};
    }
    if (scheme == Scheme::NaiveDpc) {
        Allocation alloc{1.0, 0.0};
        return SchemeResult{scheme,
                            DistortionPoint{alloc, naive_dpc_distortion(model, channel), scheme},
                            {},
                            true};
    }

    // axis 0 = pa, axis 1 = gamma, so the lexicographic tie-break of
    // grid_refine yields smallest pa, then smallest gamma
    const auto eval = [&](double pa, double gamma) {
        const Allocation alloc{gamma, std::min(pa, channel.p)};
        return scheme == Scheme::DigitalDpc ? digital_dpc_distortion(model, channel, alloc)
                                            : hda_distortion(model, channel, alloc);
    };

    const auto objective = [&](std::span<const double> x) { return eval(x[0], x[1]); };
    const auto refined = grid_refine(objective, spec);
    SchemeResult result{scheme,
                        DistortionPoint{Allocation{refined.argmin[1], refined.argmin[0]},
                                        refined.value, scheme},
                        {},
                        true};

    // coarse-grid record, same lattice as the optimizer's first pass
    const auto& ax_pa = spec.axes.at(0);
    const auto& ax_g = spec.axes.at(1);
    result.grid.reserve(static_cast<std::size_t>(ax_pa.count) * ax_g.count);
    for (int i = 0; i < ax_pa.count; ++i) {
        const double pa = ax_pa.lower + (ax_pa.upper - ax_pa.lower) * i / (ax_pa.count - 1);
        for (int j = 0; j < ax_g.count; ++j) {
            const double g = ax_g.lower + (ax_g.upper - ax_g.lower) * j / (ax_g.count - 1);
            result.grid.push_back(
                DistortionPoint{Allocation{g, std::min(pa, channel.p)}, eval(pa, g), scheme});
        }
    }

    // check rather than assume that restricting to gamma = 1 costs nothing
    GridSpec line = spec;
    line.axes = {spec.axes[0], AxisSpec{1.0, 1.0, 2}};
    const auto gamma_one = grid_refine(objective, line);
    result.gamma_one_optimal = gamma_one.value <= refined.value + spec.tolerance;
    return result;
}

}  // namespace jscc

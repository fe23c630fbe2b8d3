#include "jscc/mismatch.hpp"

#include <cmath>
#include <stdexcept>

#include "jscc/estimators.hpp"
#include "jscc/schemes.hpp"

namespace jscc {

WzMismatchInputs::WzMismatchInputs(double d_star_, double d_star_actual_, double d_design_)
    : d_star(d_star_), d_star_actual(d_star_actual_), d_design(d_design_),
      alpha_sep(0.0) {
    if (!(d_design > 0.0) || !(d_design <= d_star)) {
        throw std::invalid_argument("d_design must satisfy 0 < d_design <= d_star");
    }
    if (!(d_star_actual > 0.0)) {
        throw std::invalid_argument("d_star_actual must be positive");
    }
    alpha_sep = std::sqrt((d_star - d_design) / d_star);
}

WzMismatchResult wz_mismatch_distortion(const WzMismatchInputs& in) {
    const double num = in.d_star * in.d_star_actual;
    const double den = num + (in.d_star - in.d_star_actual) * in.d_design;
    return WzMismatchResult{num / den * in.d_design, in.d_star_actual > in.d_star};
}

double digital_dpc_mismatch(const SourceModel& model, const ChannelSpec& channel,
                            const Allocation& alloc) {
    if (channel.n_actual > channel.n_design) {
        throw std::domain_error(
            "digital part does not decode for n_actual > n_design; use degraded_distortion");
    }
    const double d_star = analog_params(model, channel, alloc).d_star;
    const double d_sep = digital_dpc_distortion(model, channel, alloc);
    const double d_star_a =
        analog_params_at(model, channel, alloc, channel.n_actual).d_star;
    return wz_mismatch_distortion(WzMismatchInputs{d_star, d_star_a, d_sep}).distortion;
}

double hda_mismatch(const SourceModel& model, const ChannelSpec& channel,
                    const Allocation& alloc) {
    if (channel.n_actual > channel.n_design) {
        throw std::domain_error(
            "auxiliary codeword does not decode for n_actual > n_design; "
            "use degraded_distortion");
    }
    const double d_star = analog_params(model, channel, alloc).d_star;
    const auto coeffs = hda_coefficients(model, channel, alloc, d_star);
    if (coeffs.p_h <= 0.0) {
        return analog_params_at(model, channel, alloc, channel.n_actual).d_star;
    }
    const auto m = moment_set(model, channel, alloc, coeffs);  // e_y2 at n_actual
    const double det = m.e_u2 * m.e_y2 - m.e_uy * m.e_uy;
    const double quad = (m.e_vu * m.e_vu * m.e_y2 - 2.0 * m.e_vu * m.e_vy * m.e_uy +
                         m.e_vy * m.e_vy * m.e_u2) /
                        det;
    return model.sigma_v2 - quad;
}

double degraded_distortion(const SourceModel& model, const ChannelSpec& channel,
                           const Allocation& alloc) {
    return analog_params_at(model, channel, alloc, channel.n_actual).d_star;
}

double mi_refinement_digital(const SourceModel& model, const ChannelSpec& channel,
                             const Allocation& alloc, double d_design) {
    if (model.rho != 0.0) {
        throw std::domain_error("refinement information is derived for rho = 0 only");
    }
    const double d_star = analog_params(model, channel, alloc).d_star;
    if (!(d_design > 0.0) || d_design > d_star) {
        throw std::invalid_argument("d_design must satisfy 0 < d_design <= d_star");
    }
    const double d_star_a =
        analog_params_at(model, channel, alloc, channel.n_actual).d_star;
    const double alpha_sep2 = (d_star - d_design) / d_star;
    return 0.5 * std::log2((alpha_sep2 * d_star_a + d_design) / d_design);
}

double mi_refinement_hda(const SourceModel& model, const ChannelSpec& channel,
                         const Allocation& alloc) {
    if (model.rho != 0.0) {
        throw std::domain_error("refinement information is derived for rho = 0 only");
    }
    const double d_star = analog_params(model, channel, alloc).d_star;
    const auto coeffs = hda_coefficients(model, channel, alloc, d_star);
    if (coeffs.p_h <= 0.0) return 0.0;  // U carries nothing beyond Y
    const auto m = moment_set(model, channel, alloc, coeffs);
    const double cond_var_uy = m.e_u2 - m.e_uy * m.e_uy / m.e_y2;
    const double residual = (1.0 - coeffs.alpha) * (1.0 - coeffs.alpha) * coeffs.p_h +
                            coeffs.alpha * coeffs.alpha * channel.n_actual;
    return 0.5 * std::log2(cond_var_uy / residual);
}

Allocation design_allocation(const SourceModel& model, const ChannelSpec& channel) {
    return design_allocation(model, channel, default_grid_2d(0.0, channel.p, 0.0, 1.0));
}

Allocation design_allocation(const SourceModel& model, const ChannelSpec& channel,
                             const GridSpec& spec) {
    const ChannelSpec design{channel.p, channel.n_design};
    return optimize_scheme(model, design, Scheme::DigitalDpc, spec).best.allocation;
}

}  // namespace jscc

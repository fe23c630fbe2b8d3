#include "jscc/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jscc {

AnalogParams analog_params_at(const SourceModel& model, const ChannelSpec& channel,
                              const Allocation& alloc, double noise) {
    require_valid(model, channel, alloc);
    if (!(noise > 0.0)) throw std::invalid_argument("noise must be positive");

    const double sv = model.sigma_v();
    const double ss = model.sigma_s();
    const double g = alloc.gamma;
    const double sigma_a2 = g * g * model.sigma_v2 + (1.0 - g) * (1.0 - g) * model.sigma_s2 +
                            2.0 * g * (1.0 - g) * model.cross();

    double a = 0.0;
    if (alloc.pa > 0.0) {
        if (sigma_a2 <= kDegenerateEps) {
            throw std::domain_error("analog direction degenerate: sigma_a2 ~ 0 with pa > 0");
        }
        a = alloc.pa / sigma_a2;
    }
    const double sqa = std::sqrt(a);

    const double e_vy = sqa * (g * model.sigma_v2 + (1.0 - g) * model.rho * sv * ss) +
                        model.rho * sv * ss;
    const double e_y2 = channel.p + noise + model.sigma_s2 +
                        2.0 * sqa * ((1.0 - g) * model.sigma_s2 + g * model.rho * sv * ss);
    const double beta = e_vy / e_y2;
    const double d_star = std::max(0.0, model.sigma_v2 - beta * e_vy);
    return AnalogParams{sigma_a2, a, beta, d_star, e_vy, e_y2};
}

AnalogParams analog_params(const SourceModel& model, const ChannelSpec& channel,
                           const Allocation& alloc) {
    return analog_params_at(model, channel, alloc, channel.n_design);
}

HdaCoefficients hda_coefficients(const SourceModel& model, const ChannelSpec& channel,
                                 const Allocation& alloc, double d_star) {
    require_valid(model, channel, alloc);
    const double p_h = channel.p - alloc.pa;
    if (p_h <= 0.0) return HdaCoefficients{0.0, 0.0, 0.0};
    if (d_star <= kDegenerateEps) {
        throw std::domain_error("d_star ~ 0 with p_h > 0: no refinement target");
    }
    const double n = channel.n_design;
    const double alpha = p_h / (p_h + n);
    const double kappa = std::sqrt(p_h * p_h / ((p_h + n) * d_star));
    return HdaCoefficients{alpha, kappa, p_h};
}

MomentSet moment_set(const SourceModel& model, const ChannelSpec& channel,
                     const Allocation& alloc, const HdaCoefficients& coeffs) {
    require_valid(model, channel, alloc);
    const double sv = model.sigma_v();
    const double ss = model.sigma_s();
    const double g = alloc.gamma;
    const double sigma_a2 = g * g * model.sigma_v2 + (1.0 - g) * (1.0 - g) * model.sigma_s2 +
                            2.0 * g * (1.0 - g) * model.cross();
    double a = 0.0;
    if (alloc.pa > 0.0) {
        if (sigma_a2 <= kDegenerateEps) {
            throw std::domain_error("analog direction degenerate: sigma_a2 ~ 0 with pa > 0");
        }
        a = alloc.pa / sigma_a2;
    }
    const double sqa = std::sqrt(a);
    const double c = 1.0 + sqa * (1.0 - g);  // coefficient of S inside S'

    const double e_sp2 = a * g * g * model.sigma_v2 + c * c * model.sigma_s2 +
                         2.0 * sqa * g * c * model.rho * sv * ss;
    const double e_spv = sqa * g * model.sigma_v2 + c * model.rho * sv * ss;

    const double al = coeffs.alpha;
    const double ka = coeffs.kappa;
    const double ph = coeffs.p_h;
    const double e_u2 = ph + al * al * e_sp2 + ka * ka * model.sigma_v2 + 2.0 * al * ka * e_spv;
    const double e_y2 = ph + e_sp2 + channel.n_actual;
    const double e_uy = ph + al * e_sp2 + ka * e_spv;
    const double e_vu = al * e_spv + ka * model.sigma_v2;

    return MomentSet{e_sp2, e_spv, e_u2, e_y2, e_uy, e_vu, e_spv};
}

}  // namespace jscc

#ifndef JSCC_ESTIMATORS_HPP
#define JSCC_ESTIMATORS_HPP

#include "jscc/model.hpp"

namespace jscc {

/// Degeneracy guard used throughout; quantities here are O(1)-O(1e2),
/// so anything below this is roundoff, not a real direction.
inline constexpr double kDegenerateEps = 1e-12;

/// Analog branch X_a = sqrt(a) (gamma V + (1-gamma) S) and the linear
/// estimate of V from Y alone.
struct AnalogParams {
    double sigma_a2;  // variance of gamma V + (1-gamma) S
    double a;         // power scaling pa / sigma_a2 (0 when pa = 0)
    double beta;      // E[VY]/E[Y^2]
    double d_star;    // MSE of V - beta Y
    double e_vy;      // E[VY]
    double e_y2;      // E[Y^2]
};

/// Auxiliary-variable coefficients U = X_h + alpha S' + kappa V.
/// alpha = p_h/(p_h + N); kappa is the nonnegative root of
/// kappa^2 = p_h^2 / ((p_h + N) D*).
struct HdaCoefficients {
    double alpha;
    double kappa;
    double p_h;  // P - pa
};

/// Second moments of (S', U, Y, V). e_vy == e_spv identically.
struct MomentSet {
    double e_sp2;  // E[S'^2]
    double e_spv;  // E[S'V]
    double e_u2;   // E[U^2]
    double e_y2;   // E[Y^2]
    double e_uy;   // E[UY]
    double e_vu;   // E[VU]
    double e_vy;   // E[VY]
};

/// Design-noise analog parameters (beta and D* against n_design).
/// Throws std::domain_error when pa > 0 and the analog direction has
/// vanishing variance (only possible at rho = -1 with gamma sigma_v =
/// (1-gamma) sigma_s).
AnalogParams analog_params(const SourceModel& model, const ChannelSpec& channel,
                           const Allocation& alloc);

/// Same computation with an explicit noise variance in E[Y^2]; used for
/// the receiver-side estimate under an actual noise level.
AnalogParams analog_params_at(const SourceModel& model, const ChannelSpec& channel,
                              const Allocation& alloc, double noise);

/// Coefficients for the given residual MSE d_star. p_h = 0 yields
/// alpha = kappa = 0. Throws std::domain_error if p_h > 0 and
/// d_star <= kDegenerateEps.
HdaCoefficients hda_coefficients(const SourceModel& model, const ChannelSpec& channel,
                                 const Allocation& alloc, double d_star);

/// All seven second moments. E[Y^2] uses channel.n_actual (equal to
/// n_design in the matched case); every other entry is noise-free and
/// keeps its design-time value.
MomentSet moment_set(const SourceModel& model, const ChannelSpec& channel,
                     const Allocation& alloc, const HdaCoefficients& coeffs);

}  // namespace jscc

#endif

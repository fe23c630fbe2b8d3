#ifndef JSCC_MISMATCH_HPP
#define JSCC_MISMATCH_HPP

#include "jscc/model.hpp"
#include "jscc/optimizer.hpp"

namespace jscc {

/// Wyner-Ziv quantizer designed for side-information MSE d_star and
/// target d_design, decoded against side information of quality
/// d_star_actual.
struct WzMismatchInputs {
    double d_star;
    double d_star_actual;
    double d_design;
    double alpha_sep;  // sqrt((d_star - d_design)/d_star)

    WzMismatchInputs(double d_star, double d_star_actual, double d_design);
};

struct WzMismatchResult {
    double distortion;
    /// Set when d_star_actual > d_star: the closed form is evaluated as
    /// algebra but the regime is outside the derivation's scope.
    bool beyond_design;
};

/// D_a = D* D*_a / (D* D*_a + (D* - D*_a) D) * D.
WzMismatchResult wz_mismatch_distortion(const WzMismatchInputs& in);

/// Digital scheme decoded over a better-than-designed channel
/// (n_actual <= n_design): design-time D*, D_sep at the given
/// allocation, receiver-side D*_a at actual noise, composed through the
/// mismatched-side-information form.
double digital_dpc_mismatch(const SourceModel& model, const ChannelSpec& channel,
                            const Allocation& alloc);

/// Auxiliary-variable scheme under the same conditions: design-time
/// coefficients, estimation with E[Y^2] recomputed at the actual noise.
double hda_mismatch(const SourceModel& model, const ChannelSpec& channel,
                    const Allocation& alloc);

/// Channel worse than designed (n_actual > n_design): neither digital
/// part decodes, both schemes fall back to the linear estimate from Y at
/// the actual noise. Evaluated literally for any n_actual.
double degraded_distortion(const SourceModel& model, const ChannelSpec& channel,
                           const Allocation& alloc);

/// Information carried by the digital refinement beyond Y, in bits:
/// (1/2) log2 ((alpha_sep^2 D*_a + D)/D). Derived for rho = 0 only.
double mi_refinement_digital(const SourceModel& model, const ChannelSpec& channel,
                             const Allocation& alloc, double d_design);

/// Information carried by the decoded auxiliary variable beyond Y, in
/// bits: (1/2) log2 ((E[U^2] - E[UY]^2/E[Y^2]) / ((1-alpha)^2 P_h +
/// alpha^2 N_a)). Derived for rho = 0 only; a lower bound under
/// mismatch, exact when matched.
double mi_refinement_hda(const SourceModel& model, const ChannelSpec& channel,
                         const Allocation& alloc);

/// The allocation a transmitter designing for n_design would pick:
/// argmin of the digital scheme's matched distortion. Held fixed when
/// the actual channel deviates.
Allocation design_allocation(const SourceModel& model, const ChannelSpec& channel);
Allocation design_allocation(const SourceModel& model, const ChannelSpec& channel,
                             const GridSpec& spec);

}  // namespace jscc

#endif

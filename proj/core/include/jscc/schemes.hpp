#ifndef JSCC_SCHEMES_HPP
#define JSCC_SCHEMES_HPP

#include <vector>

#include "jscc/estimators.hpp"
#include "jscc/model.hpp"
#include "jscc/optimizer.hpp"

namespace jscc {

struct SchemeResult {
    Scheme scheme;
    DistortionPoint best;
    /// Coarse-grid evaluations (populated for the allocation-dependent
    /// schemes; empty otherwise).
    std::vector<DistortionPoint> grid;
    /// Point-to-point observation that gamma = 1 is never beaten by more
    /// than the refinement tolerance. Checked, not assumed.
    bool gamma_one_optimal = true;
};

/// Full-power analog transmission of the source: D* at (gamma=1, pa=P).
double uncoded_distortion(const SourceModel& model, const ChannelSpec& channel);

/// Quantize-and-DPC treating S as pure interference:
/// sigma_v2 / (1 + P/N), independent of rho and sigma_s2.
double naive_dpc_distortion(const SourceModel& model, const ChannelSpec& channel);

/// Wyner-Ziv + DPC refinement at a fixed allocation:
/// D* / (1 + (P - pa)/N).
double digital_dpc_distortion(const SourceModel& model, const ChannelSpec& channel,
                              const Allocation& alloc);

/// Auxiliary-variable scheme at a fixed allocation:
/// sigma_v2 - Gamma^T Lambda_UY^-1 Gamma. Requires matched noise; equals
/// D* when pa = P.
double hda_distortion(const SourceModel& model, const ChannelSpec& channel,
                      const Allocation& alloc);

/// Minimizes the chosen scheme over gamma in [0,1], pa in [0,P].
/// Tie-break: smallest pa, then smallest gamma.
SchemeResult optimize_scheme(const SourceModel& model, const ChannelSpec& channel,
                             Scheme scheme);
SchemeResult optimize_scheme(const SourceModel& model, const ChannelSpec& channel,
                             Scheme scheme, const GridSpec& spec);

}  // namespace jscc

#endif

#ifndef JSCC_BOUNDS_HPP
#define JSCC_BOUNDS_HPP

#include "jscc/model.hpp"

namespace jscc {

/// Genie bound with the interference revealed to the decoder:
/// sigma_v2 (1 - rho^2) / (1 + P/N).
double outer_bound_1(const SourceModel& model, const ChannelSpec& channel);

/// Genie bound with only the interference innovation revealed:
/// sigma_v2 / (1 + (sqrt(P) + rho sigma_s)^2 / N). Evaluated as written
/// for rho < 0 as well; the combined bound is what matters there.
double outer_bound_2(const SourceModel& model, const ChannelSpec& channel);

/// max of the two bounds.
double combined_outer(const SourceModel& model, const ChannelSpec& channel);

}  // namespace jscc

#endif

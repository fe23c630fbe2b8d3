#include "jscc/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace jscc {

double outer_bound_1(const SourceModel& model, const ChannelSpec& channel) {
    return model.sigma_v2 * (1.0 - model.rho * model.rho) / (1.0 + channel.p / channel.n_design);
}

double outer_bound_2(const SourceModel& model, const ChannelSpec& channel) {
    const double coherent = std::sqrt(channel.p) + model.rho * model.sigma_s();
    return model.sigma_v2 / (1.0 + coherent * coherent / channel.n_design);
}

double combined_outer(const SourceModel& model, const ChannelSpec& channel) {
    return std::max(outer_bound_1(model, channel), outer_bound_2(model, channel));
}

}  // namespace jscc

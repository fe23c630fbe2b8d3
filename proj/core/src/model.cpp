#include "jscc/model.hpp"

#include <cmath>
#include <stdexcept>

namespace jscc {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::Uncoded: return "uncoded";
        case Scheme::NaiveDpc: return "naive-dpc";
        case Scheme::DigitalDpc: return "digital-dpc";
        case Scheme::Hda: return "hda";
    }
    return "unknown";
}

std::optional<Scheme> scheme_from_string(std::string_view name) {
    if (name == "uncoded") return Scheme::Uncoded;
    if (name == "naive-dpc") return Scheme::NaiveDpc;
    if (name == "digital-dpc") return Scheme::DigitalDpc;
    if (name == "hda") return Scheme::Hda;
    return std::nullopt;
}

std::optional<std::string> check_source_model(double sigma_v2, double sigma_s2, double rho) {
    if (!finite(sigma_v2) || sigma_v2 <= 0.0) return "sigma_v2 must be positive";
    if (!finite(sigma_s2) || sigma_s2 <= 0.0) return "sigma_s2 must be positive";
    if (!finite(rho) || rho < -1.0 || rho > 1.0) return "rho out of range";
    // covariance matrix [[sv2, c],[c, ss2]]: det = sv2*ss2*(1-rho^2) >= 0
    const double det = sigma_v2 * sigma_s2 * (1.0 - rho * rho);
    if (det < 0.0) return "covariance matrix not positive semidefinite";
    return std::nullopt;
}

std::optional<std::string> check_channel(double p, double n_design, double n_actual) {
    if (!finite(p) || p <= 0.0) return "p must be positive";
    if (!finite(n_design) || n_design <= 0.0) return "n_design must be positive";
    if (!finite(n_actual) || n_actual <= 0.0) return "n_actual must be positive";
    return std::nullopt;
}

std::optional<std::string> check_allocation(double gamma, double pa) {
    if (!finite(gamma) || gamma < 0.0 || gamma > 1.0) return "gamma out of range";
    if (!finite(pa) || pa < 0.0) return "pa must be nonnegative";
    return std::nullopt;
}

std::optional<std::string> check_cognitive(double p1, double p2, double n1, double n2,
                                           double sigma_v1_2, double sigma_v2_2, double rho) {
    if (!finite(p1) || p1 <= 0.0) return "p1 must be positive";
    if (!finite(p2) || p2 <= 0.0) return "p2 must be positive";
    if (!finite(n1) || n1 <= 0.0) return "n1 must be positive";
    if (!finite(n2) || n2 <= 0.0) return "n2 must be positive";
    if (!finite(sigma_v1_2) || sigma_v1_2 <= 0.0) return "sigma_v1_2 must be positive";
    if (!finite(sigma_v2_2) || sigma_v2_2 <= 0.0) return "sigma_v2_2 must be positive";
    if (!finite(rho) || rho < -1.0 || rho > 1.0) return "rho out of range";
    return std::nullopt;
}

SourceModel::SourceModel(double sigma_v2_, double sigma_s2_, double rho_)
    : sigma_v2(sigma_v2_), sigma_s2(sigma_s2_), rho(rho_) {
    if (auto err = check_source_model(sigma_v2, sigma_s2, rho)) {
        throw std::invalid_argument(*err);
    }
}

double SourceModel::sigma_v() const { return std::sqrt(sigma_v2); }
double SourceModel::sigma_s() const { return std::sqrt(sigma_s2); }
double SourceModel::cross() const { return rho * sigma_v() * sigma_s(); }

ChannelSpec::ChannelSpec(double p_, double n_design_)
    : ChannelSpec(p_, n_design_, n_design_) {}

ChannelSpec::ChannelSpec(double p_, double n_design_, double n_actual_)
    : p(p_), n_design(n_design_), n_actual(n_actual_) {
    if (auto err = check_channel(p, n_design, n_actual)) {
        throw std::invalid_argument(*err);
    }
}

Allocation::Allocation(double gamma_, double pa_) : gamma(gamma_), pa(pa_) {
    if (auto err = check_allocation(gamma, pa)) {
        throw std::invalid_argument(*err);
    }
}

CognitiveConfig::CognitiveConfig(double p1_, double p2_, double h1_, double h2_,
                                 double sigma_v1_2_, double sigma_v2_2_, double rho_,
                                 double n1_, double n2_)
    : p1(p1_), p2(p2_), h1(h1_), h2(h2_), n1(n1_), n2(n2_),
      sigma_v1_2(sigma_v1_2_), sigma_v2_2(sigma_v2_2_), rho(rho_) {
    if (auto err = check_cognitive(p1, p2, n1, n2, sigma_v1_2, sigma_v2_2, rho)) {
        throw std::invalid_argument(*err);
    }
    if (!finite(h1) || !finite(h2)) {
        throw std::invalid_argument("channel gains must be finite");
    }
}

std::optional<std::string> validate(const SourceModel& model, const ChannelSpec& channel,
                                    const Allocation& alloc) {
    if (auto err = check_source_model(model.sigma_v2, model.sigma_s2, model.rho)) return err;
    if (auto err = check_channel(channel.p, channel.n_design, channel.n_actual)) return err;
    if (auto err = check_allocation(alloc.gamma, alloc.pa)) return err;
    if (alloc.pa > channel.p) return "pa exceeds power budget";
    return std::nullopt;
}

void require_valid(const SourceModel& model, const ChannelSpec& channel,
                   const Allocation& alloc) {
    if (auto err = validate(model, channel, alloc)) {
        throw std::invalid_argument(*err);
    }
}

}  // namespace jscc

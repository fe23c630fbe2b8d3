#ifndef JSCC_MODEL_HPP
#define JSCC_MODEL_HPP

#include <optional>
#include <string>
#include <string_view>

namespace jscc {

/// Transmission scheme selector.
enum class Scheme { Uncoded, NaiveDpc, DigitalDpc, Hda };

std::string_view to_string(Scheme scheme);
std::optional<Scheme> scheme_from_string(std::string_view name);

/// Joint second-order statistics of the source V and the
/// transmitter-known interference S.
struct SourceModel {
    double sigma_v2;  // source variance
    double sigma_s2;  // interference variance
    double rho;       // correlation coefficient, in [-1, 1]

    SourceModel(double sigma_v2, double sigma_s2, double rho);

    double sigma_v() const;
    double sigma_s() const;
    /// E[VS] = rho * sigma_v * sigma_s
    double cross() const;
};

/// Power budget and noise levels. n_actual differs from n_design only in
/// SNR-mismatch studies; it defaults to the design value.
struct ChannelSpec {
    double p;
    double n_design;
    double n_actual;

    ChannelSpec(double p, double n_design);
    ChannelSpec(double p, double n_design, double n_actual);

    bool matched() const { return n_actual == n_design; }
};

/// Free parameters of the superposition schemes: the analog mixing
/// coefficient gamma and the analog power pa.
struct Allocation {
    double gamma;  // in [0, 1]
    double pa;     // in [0, P]; the upper limit is checked against a channel

    Allocation(double gamma, double pa);
};

/// One evaluated (allocation -> distortion) record.
struct DistortionPoint {
    Allocation allocation;
    double distortion;
    Scheme scheme;
};

/// Two-user cognitive radio channel: direct gains 1, cross gains h1
/// (user 1 seen at receiver 2) and h2 (user 2 seen at receiver 1).
struct CognitiveConfig {
    double p1, p2;
    double h1, h2;
    double n1, n2;
    double sigma_v1_2, sigma_v2_2;
    double rho;

    CognitiveConfig(double p1, double p2, double h1, double h2,
                    double sigma_v1_2, double sigma_v2_2, double rho,
                    double n1 = 1.0, double n2 = 1.0);
};

/// Checks raw values against the SourceModel invariants.
/// Returns the first violated constraint, or nullopt when all hold.
std::optional<std::string> check_source_model(double sigma_v2, double sigma_s2, double rho);
std::optional<std::string> check_channel(double p, double n_design, double n_actual);
std::optional<std::string> check_allocation(double gamma, double pa);
std::optional<std::string> check_cognitive(double p1, double p2, double n1, double n2,
                                           double sigma_v1_2, double sigma_v2_2, double rho);

/// Joint validation, including pa <= p against this channel.
std::optional<std::string> validate(const SourceModel& model, const ChannelSpec& channel,
                                    const Allocation& alloc);

/// Throwing form of validate().
void require_valid(const SourceModel& model, const ChannelSpec& channel,
                   const Allocation& alloc);

}  // namespace jscc

#endif

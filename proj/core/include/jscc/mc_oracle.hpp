#ifndef JSCC_MC_ORACLE_HPP
#define JSCC_MC_ORACLE_HPP

#include <cstdint>
#include <utility>

#include "jscc/estimators.hpp"
#include "jscc/mismatch.hpp"
#include "jscc/model.hpp"

namespace jscc {

/// Seeded simulation settings. Identical (seed, samples) produce
/// bit-identical streams and results; samples are generated in fixed-size
/// shards with per-shard derived seeds so a parallel run reduces to the
/// same totals.
struct McConfig {
    std::uint64_t seed = 1;
    std::size_t samples = 1'000'000;
    double confidence_k = 3.0;
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Stream seed for shard `stream` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// xoshiro256++ seeded through splitmix64.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed);
    std::uint64_t next();
    /// uniform double in [0, 1), 53 random bits
    double uniform();

private:
    std::uint64_t s_[4];
};

/// Standard normal variates by the Marsaglia polar method (no inverse
/// CDF involved).
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}
    double next();

private:
    Xoshiro256pp rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// i.i.d. (v, s) pairs with the model's covariance, generated through the
/// innovation decomposition s = rho (sigma_s/sigma_v) v + n_rho.
class SourcePairSampler {
public:
    SourcePairSampler(const SourceModel& model, std::uint64_t seed);
    std::pair<double, double> next();

private:
    GaussianSampler gauss_;
    double sigma_v_;
    double slope_;
    double innovation_std_;
};

/// The (v, s) stream a verification run draws from.
inline SourcePairSampler sample_sources(const SourceModel& model, const McConfig& mc) {
    return SourcePairSampler{model, mc.seed};
}

struct Estimate {
    double mean;
    double std_error;
};

/// Empirical second moments of (S', U, Y, V) under the given design
/// coefficients.
struct MomentEstimates {
    Estimate e_sp2, e_spv, e_u2, e_y2, e_uy, e_vu, e_vy;
};

/// Simulates the analog path at the channel's actual noise and applies
/// the analytic receiver coefficient; returns the empirical MSE of the
/// linear estimate and its standard error.
Estimate simulate_linear_mmse(const SourceModel& model, const ChannelSpec& channel,
                              const Allocation& alloc, const McConfig& mc);

/// Idealized end-to-end simulation of a scheme at matched SNR: the
/// analog path is sampled exactly; the digital/HDA refinement is modeled
/// by its Gaussian test channel (respectively the encoder-side auxiliary
/// realization), then the module's estimator is applied. The uncoded
/// scheme ignores the allocation.
Estimate simulate_scheme_idealized(const SourceModel& model, const ChannelSpec& channel,
                                   const Allocation& alloc, Scheme scheme,
                                   const McConfig& mc);

/// The mismatched-side-information path on its own, from explicit
/// (D*, D*_a, D) inputs.
Estimate simulate_wz_mismatch(const WzMismatchInputs& in, const McConfig& mc);

/// Sample moments for comparison against moment_set.
MomentEstimates simulate_moments(const SourceModel& model, const ChannelSpec& channel,
                                 const Allocation& alloc, const McConfig& mc);

}  // namespace jscc

#endif

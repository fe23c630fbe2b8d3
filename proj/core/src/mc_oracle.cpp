#include "jscc/mc_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "jscc/schemes.hpp"

namespace jscc {

namespace {

constexpr std::size_t kShardSize = 1u << 16;

void check_config(const McConfig& mc) {
    if (mc.samples < 10'000) throw std::invalid_argument("samples must be >= 1e4");
    if (!(mc.confidence_k > 0.0)) throw std::invalid_argument("confidence_k must be positive");
}

// Neumaier-compensated accumulator; order-stable reductions
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Runs `body(sampler, count)` once per shard with a derived seed and
// reduces per-shard (sum, sum of squares) in shard order.
template <typename Body>
Estimate sharded_mse(const McConfig& mc, Body&& body) {
    check_config(mc);
    CompensatedSum total, total_sq;
    std::size_t remaining = mc.samples;
    std::uint64_t shard = 0;
    while (remaining > 0) {
        const std::size_t count = remaining < kShardSize ? remaining : kShardSize;
        GaussianSampler gauss(derive_seed(mc.seed, shard));
        CompensatedSum local, local_sq;
        body(gauss, count, local, local_sq);
        total.add(local.value());
        total_sq.add(local_sq.value());
        remaining -= count;
        ++shard;
    }
    const double n = static_cast<double>(mc.samples);
    const double mean = total.value() / n;
    const double var = (total_sq.value() - n * mean * mean) / (n - 1.0);
    return Estimate{mean, std::sqrt(std::max(var, 0.0) / n)};
}

struct AnalogDraw {
    double v, s, sp;
};

// shared analog-path sampling: v, s, and S' = sqrt(a) gamma v + c s
struct AnalogSim {
    double sigma_v, slope, innovation_std;
    double sqa, gamma, c;

    AnalogSim(const SourceModel& model, const Allocation& alloc, double a)
        : sigma_v(model.sigma_v()),
          slope(model.rho * model.sigma_s() / model.sigma_v()),
          innovation_std(std::sqrt((1.0 - model.rho * model.rho) * model.sigma_s2)),
          sqa(std::sqrt(a)),
          gamma(alloc.gamma),
          c(1.0 + std::sqrt(a) * (1.0 - alloc.gamma)) {}

    AnalogDraw next(GaussianSampler& g) const {
        const double v = sigma_v * g.next();
        const double s = slope * v + innovation_std * g.next();
        const double sp = sqa * gamma * v + c * s;
        return {v, s, sp};
    }
};

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed ^ (0xA0761D6478BD642FULL * (stream + 1));
    return splitmix64(state);
}

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (auto& word : s_) word = splitmix64(state);
}

std::uint64_t Xoshiro256pp::next() {
    const auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256pp::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double GaussianSampler::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * rng_.uniform() - 1.0;
        v = 2.0 * rng_.uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

SourcePairSampler::SourcePairSampler(const SourceModel& model, std::uint64_t seed)
    : gauss_(seed),
      sigma_v_(model.sigma_v()),
      slope_(model.rho * model.sigma_s() / model.sigma_v()),
      innovation_std_(std::sqrt((1.0 - model.rho * model.rho) * model.sigma_s2)) {}

std::pair<double, double> SourcePairSampler::next() {
    const double v = sigma_v_ * gauss_.next();
    const double s = slope_ * v + innovation_std_ * gauss_.next();
    return {v, s};
}

Estimate simulate_linear_mmse(const SourceModel& model, const ChannelSpec& channel,
                              const Allocation& alloc, const McConfig& mc) {
    const auto ap = analog_params_at(model, channel, alloc, channel.n_actual);
    const AnalogSim sim(model, alloc, ap.a);
    const double coded_std = std::sqrt(channel.p - alloc.pa);
    const double noise_std = std::sqrt(channel.n_actual);
    return sharded_mse(mc, [&](GaussianSampler& g, std::size_t count, CompensatedSum& acc,
                               CompensatedSum& acc_sq) {
        for (std::size_t i = 0; i < count; ++i) {
            const auto d = sim.next(g);
            const double y = coded_std * g.next() + d.sp + noise_std * g.next();
            const double e = d.v - ap.beta * y;
            acc.add(e * e);
            acc_sq.add(e * e * e * e);
        }
    });
}

Estimate simulate_wz_mismatch(const WzMismatchInputs& in, const McConfig& mc) {
    const double c = in.alpha_sep * in.d_star_actual /
                     (in.alpha_sep * in.alpha_sep * in.d_star_actual + in.d_design);
    const double wa_std = std::sqrt(in.d_star_actual);
    const double b_std = std::sqrt(in.d_design);
    return sharded_mse(mc, [&](GaussianSampler& g, std::size_t count, CompensatedSum& acc,
                               CompensatedSum& acc_sq) {
        for (std::size_t i = 0; i < count; ++i) {
            const double wa = wa_std * g.next();
            const double b = b_std * g.next();
            const double e = wa - c * (in.alpha_sep * wa + b);
            acc.add(e * e);
            acc_sq.add(e * e * e * e);
        }
    });
}

Estimate simulate_scheme_idealized(const SourceModel& model, const ChannelSpec& channel,
                                   const Allocation& alloc, Scheme scheme,
                                   const McConfig& mc) {
    if (!channel.matched()) {
        throw std::domain_error("idealized scheme simulation requires matched noise");
    }
    if (scheme == Scheme::Uncoded) {
        return simulate_linear_mmse(model, channel, Allocation{1.0, channel.p}, mc);
    }
    if (scheme == Scheme::NaiveDpc) {
        // quantize-and-DPC test channel with no receiver side information
        const double d = naive_dpc_distortion(model, channel);
        const double alpha_sep = std::sqrt((model.sigma_v2 - d) / model.sigma_v2);
        const double gain = alpha_sep * model.sigma_v2 /
                            (alpha_sep * alpha_sep * model.sigma_v2 + d);
        const double b_std = std::sqrt(d);
        return sharded_mse(mc, [&](GaussianSampler& g, std::size_t count, CompensatedSum& acc,
                                   CompensatedSum& acc_sq) {
            const double sv = model.sigma_v();
            for (std::size_t i = 0; i < count; ++i) {
                const double v = sv * g.next();
                const double t = alpha_sep * v + b_std * g.next();
                const double e = v - gain * t;
                acc.add(e * e);
                acc_sq.add(e * e * e * e);
            }
        });
    }

    const auto ap = analog_params(model, channel, alloc);
    const AnalogSim sim(model, alloc, ap.a);
    const double noise_std = std::sqrt(channel.n_design);
    const double p_h = channel.p - alloc.pa;

    if (scheme == Scheme::DigitalDpc) {
        const double d = digital_dpc_distortion(model, channel, alloc);
        const double alpha_sep = std::sqrt((ap.d_star - d) / ap.d_star);
        const double gain = alpha_sep * ap.d_star / (alpha_sep * alpha_sep * ap.d_star + d);
        const double coded_std = std::sqrt(p_h);
        const double b_std = std::sqrt(d);
        return sharded_mse(mc, [&](GaussianSampler& g, std::size_t count, CompensatedSum& acc,
                                   CompensatedSum& acc_sq) {
            for (std::size_t i = 0; i < count; ++i) {
                const auto dr = sim.next(g);
                const double y = coded_std * g.next() + dr.sp + noise_std * g.next();
                const double vp = ap.beta * y;
                const double t = alpha_sep * dr.v + b_std * g.next();
                const double e = dr.v - vp - gain * (t - alpha_sep * vp);
                acc.add(e * e);
                acc_sq.add(e * e * e * e);
            }
        });
    }

    // HDA: encoder-side u = x_h + alpha s' + kappa v, estimator from moment_set
    const auto coeffs = hda_coefficients(model, channel, alloc, ap.d_star);
    if (coeffs.p_h <= 0.0) return simulate_linear_mmse(model, channel, alloc, mc);
    const auto m = moment_set(model, channel, alloc, coeffs);
    const double det = m.e_u2 * m.e_y2 - m.e_uy * m.e_uy;
    const double g_u = (m.e_vu * m.e_y2 - m.e_vy * m.e_uy) / det;
    const double g_y = (m.e_vy * m.e_u2 - m.e_vu * m.e_uy) / det;
    const double xh_std = std::sqrt(coeffs.p_h);
    return sharded_mse(mc, [&](GaussianSampler& g, std::size_t count, CompensatedSum& acc,
                               CompensatedSum& acc_sq) {
        for (std::size_t i = 0; i < count; ++i) {
            const auto dr = sim.next(g);
            const double xh = xh_std * g.next();
            const double u = xh + coeffs.alpha * dr.sp + coeffs.kappa * dr.v;
            const double y = xh + dr.sp + noise_std * g.next();
            const double e = dr.v - g_u * u - g_y * y;
            acc.add(e * e);
            acc_sq.add(e * e * e * e);
        }
    });
}

MomentEstimates simulate_moments(const SourceModel& model, const ChannelSpec& channel,
                                 const Allocation& alloc, const McConfig& mc) {
    check_config(mc);
    const auto ap = analog_params(model, channel, alloc);
    const auto coeffs = hda_coefficients(model, channel, alloc, ap.d_star);
    const AnalogSim sim(model, alloc, ap.a);
    const double xh_std = std::sqrt(coeffs.p_h);
    const double noise_std = std::sqrt(channel.n_actual);

    constexpr int kMoments = 7;
    CompensatedSum sums[kMoments], sums_sq[kMoments];
    std::size_t remaining = mc.samples;
    std::uint64_t shard = 0;
    while (remaining > 0) {
        const std::size_t count = remaining < kShardSize ? remaining : kShardSize;
        GaussianSampler g(derive_seed(mc.seed, shard));
        CompensatedSum local[kMoments], local_sq[kMoments];
        for (std::size_t i = 0; i < count; ++i) {
            const auto dr = sim.next(g);
            const double xh = xh_std * g.next();
            const double u = xh + coeffs.alpha * dr.sp + coeffs.kappa * dr.v;
            const double y = xh + dr.sp + noise_std * g.next();
            const double vals[kMoments] = {dr.sp * dr.sp, dr.sp * dr.v, u * u, y * y,
                                           u * y,         dr.v * u,     dr.v * y};
            for (int k = 0; k < kMoments; ++k) {
                local[k].add(vals[k]);
                local_sq[k].add(vals[k] * vals[k]);
            }
        }
        for (int k = 0; k < kMoments; ++k) {
            sums[k].add(local[k].value());
            sums_sq[k].add(local_sq[k].value());
        }
        remaining -= count;
        ++shard;
    }

    const double n = static_cast<double>(mc.samples);
    const auto estimate = [&](int k) {
        const double mean = sums[k].value() / n;
        const double var = (sums_sq[k].value() - n * mean * mean) / (n - 1.0);
        return Estimate{mean, std::sqrt(std::max(var, 0.0) / n)};
    };
    return MomentEstimates{estimate(0), estimate(1), estimate(2), estimate(3),
                           estimate(4), estimate(5), estimate(6)};
}

}  // namespace jscc

#include <doctest.h>

#include <cmath>

#include "jscc/mc_oracle.hpp"
#include "jscc/schemes.hpp"

using namespace jscc;
namespace dt = doctest;

namespace {
const SourceModel kModel{1.0, 1.0, 0.3};
const ChannelSpec kChannel{10.0, 1.0};
const Allocation kAlloc{1.0, 2.0};
const McConfig kFast{42, 200'000, 3.0};
}  // namespace

TEST_CASE("identical seed and config reproduce results bit for bit") {
    const auto a = simulate_linear_mmse(kModel, kChannel, kAlloc, kFast);
    const auto b = simulate_linear_mmse(kModel, kChannel, kAlloc, kFast);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    Xoshiro256pp r1(7), r2(7);
    for (int i = 0; i < 100; ++i) CHECK(r1.next() == r2.next());
}

TEST_CASE("different shards get different derived seeds") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("source pair sampler hits the requested covariance") {
    SUBCASE("rho = 1 is exactly collinear") {
        auto sampler = sample_sources({1.0, 4.0, 1.0}, McConfig{11, 100'000, 3.0});
        for (int i = 0; i < 1000; ++i) {
            const auto [v, s] = sampler.next();
            CHECK(s == dt::Approx(2.0 * v).epsilon(1e-12));
        }
    }
    SUBCASE("sample correlation converges at the estimator rate") {
        const int n = 400'000;
        for (double rho : {0.0, 0.3}) {
            SourcePairSampler sampler({1.0, 1.0, rho}, 13);
            double svv = 0, sss = 0, svs = 0;
            for (int i = 0; i < n; ++i) {
                const auto [v, s] = sampler.next();
                svv += v * v;
                sss += s * s;
                svs += v * s;
            }
            const double rho_hat = svs / std::sqrt(svv * sss);
            const double se = (1.0 - rho * rho) / std::sqrt(static_cast<double>(n));
            CHECK(std::abs(rho_hat - rho) < 3.0 * std::max(se, 1e-6));
            CHECK(std::abs(svv / n - 1.0) < 9.0 / std::sqrt(static_cast<double>(n)));
            CHECK(std::abs(sss / n - 1.0) < 9.0 / std::sqrt(static_cast<double>(n)));
        }
    }
}

TEST_CASE("linear estimate simulation agrees with the closed form") {
    SUBCASE("no analog power, independent interference") {
        const auto est =
            simulate_linear_mmse({1.0, 1.0, 0.0}, kChannel, Allocation{1.0, 0.0}, kFast);
        CHECK(std::abs(est.mean - 1.0) < 3.0 * est.std_error);
    }
    SUBCASE("coherent full power") {
        const auto est =
            simulate_linear_mmse({1.0, 1.0, 1.0}, kChannel, Allocation{1.0, 10.0}, kFast);
        const double sq1 = std::sqrt(10.0) + 1.0;
        CHECK(std::abs(est.mean - 1.0 / (1.0 + sq1 * sq1)) < 3.0 * est.std_error);
    }
    SUBCASE("regression tuple") {
        const auto est = simulate_linear_mmse(kModel, kChannel, kAlloc, kFast);
        CHECK(std::abs(est.mean - 0.7712945711762254) < 3.0 * est.std_error);
        CHECK(est.std_error < 0.01);
    }
    SUBCASE("actual-noise variant tracks the degraded closed form") {
        const ChannelSpec ch{10.0, 1.0, 3.0};
        const auto est = simulate_linear_mmse(kModel, ch, kAlloc, kFast);
        const double expected = analog_params_at(kModel, ch, kAlloc, 3.0).d_star;
        CHECK(std::abs(est.mean - expected) < 3.0 * est.std_error);
    }
}

TEST_CASE("idealized scheme simulations agree with the closed forms") {
    SUBCASE("digital at the naive corner") {
        const auto est = simulate_scheme_idealized({1.0, 1.0, 0.0}, kChannel,
                                                   Allocation{1.0, 0.0}, Scheme::DigitalDpc,
                                                   kFast);
        CHECK(std::abs(est.mean - 1.0 / 11) < 3.0 * est.std_error);
    }
    SUBCASE("digital and hda agree with each other empirically") {
        const auto sep =
            simulate_scheme_idealized(kModel, kChannel, kAlloc, Scheme::DigitalDpc, kFast);
        McConfig other = kFast;
        other.seed = 43;
        const auto hda = simulate_scheme_idealized(kModel, kChannel, kAlloc, Scheme::Hda, other);
        const double joint_se = std::hypot(sep.std_error, hda.std_error);
        CHECK(std::abs(sep.mean - hda.mean) < 3.0 * joint_se);
        CHECK(std::abs(sep.mean - 0.08569939679735837) < 3.0 * sep.std_error);
    }
    SUBCASE("uncoded and naive tags") {
        const auto unc =
            simulate_scheme_idealized(kModel, kChannel, kAlloc, Scheme::Uncoded, kFast);
        CHECK(std::abs(unc.mean - uncoded_distortion(kModel, kChannel)) < 3.0 * unc.std_error);
        const auto nai =
            simulate_scheme_idealized(kModel, kChannel, kAlloc, Scheme::NaiveDpc, kFast);
        CHECK(std::abs(nai.mean - 1.0 / 11) < 3.0 * nai.std_error);
    }
}

TEST_CASE("mismatched side-information simulation") {
    const WzMismatchInputs in{0.1, 0.05, 0.05};
    const auto est = simulate_wz_mismatch(in, kFast);
    CHECK(std::abs(est.mean - 1.0 / 30) < 3.0 * est.std_error);
}

TEST_CASE("empirical moments match the closed forms elementwise") {
    const auto m = moment_set(kModel, kChannel, kAlloc,
                              hda_coefficients(kModel, kChannel, kAlloc,
                                               analog_params(kModel, kChannel, kAlloc).d_star));
    const auto est = simulate_moments(kModel, kChannel, kAlloc, kFast);
    const auto close = [](const Estimate& e, double analytic) {
        return std::abs(e.mean - analytic) < 3.0 * e.std_error;
    };
    CHECK(close(est.e_sp2, m.e_sp2));
    CHECK(close(est.e_spv, m.e_spv));
    CHECK(close(est.e_u2, m.e_u2));
    CHECK(close(est.e_y2, m.e_y2));
    CHECK(close(est.e_uy, m.e_uy));
    CHECK(close(est.e_vu, m.e_vu));
    CHECK(close(est.e_vy, m.e_vy));
}

TEST_CASE("config invariants are enforced") {
    CHECK_THROWS_AS(simulate_linear_mmse(kModel, kChannel, kAlloc, McConfig{1, 100, 3.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_linear_mmse(kModel, kChannel, kAlloc, McConfig{1, 100'000, 0.0}),
                    std::invalid_argument);
}

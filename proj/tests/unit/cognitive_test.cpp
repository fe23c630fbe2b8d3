#include <doctest.h>

#include <cmath>

#include "jscc/cognitive.hpp"
#include "jscc/schemes.hpp"

using namespace jscc;
namespace dt = doctest;

namespace {
const CognitiveConfig kWeak{1.0, 1.0, 0.5, 0.5, 1.0, 1.0, 0.0};
const CognitiveConfig kVeryStrong{1.0, 1.0, 1.5, 1.5, 1.0, 1.0, 0.0};

CognitiveConfig with_rho(const CognitiveConfig& cfg, double rho) {
    return CognitiveConfig{cfg.p1, cfg.p2, cfg.h1, cfg.h2,
                           cfg.sigma_v1_2, cfg.sigma_v2_2, rho, cfg.n1, cfg.n2};
}
}  // namespace

TEST_CASE("regime classification") {
    CHECK(classify_regime(kWeak) == Regime::Weak);
    CHECK(classify_regime(kVeryStrong) == Regime::VeryStrong);
    CHECK(classify_regime({1.0, 1.0, 0.5, 1.01, 1.0, 1.0, 0.0}) == Regime::Other);
    // |h2| = 1 sits in the weak characterization
    CHECK(classify_regime({1.0, 1.0, 0.5, 1.0, 1.0, 1.0, 0.0}) == Regime::Weak);
}

TEST_CASE("primary distortion") {
    SUBCASE("no analog power: plain interference channel, gamma-independent") {
        const double expected = 1.0 - 1.0 / (1.0 + 0.25 + 1.0);
        for (double g : {0.0, 0.3, 1.0}) {
            CHECK(primary_distortion(kWeak, Allocation{g, 0.0}) ==
                  dt::Approx(expected).epsilon(1e-14));
        }
    }
    SUBCASE("relaying the primary helps it") {
        const double base = primary_distortion(kWeak, Allocation{0.0, 0.0});
        CHECK(primary_distortion(kWeak, Allocation{0.0, 0.5}) < base);
    }
    SUBCASE("frozen fixture at a mid-grid allocation") {
        CHECK(primary_distortion(kWeak, Allocation{0.5, 0.5}) ==
              dt::Approx(0.47735435498828693).epsilon(1e-13));
    }
    SUBCASE("pa above the secondary budget is rejected") {
        CHECK_THROWS_AS(primary_distortion(kWeak, Allocation{0.5, 1.5}), std::invalid_argument);
    }
}

TEST_CASE("secondary distortion delegates through the substitution") {
    SUBCASE("independent sources, pure digital: naive DPC level") {
        CHECK(secondary_distortion(kWeak, Allocation{1.0, 0.0}) ==
              dt::Approx(1.0 / (1.0 + 1.0)).epsilon(1e-14));
    }
    SUBCASE("frozen fixture at a mid-grid allocation") {
        CHECK(secondary_distortion(kWeak, Allocation{0.5, 0.5}) ==
              dt::Approx(0.5627527934719375).epsilon(1e-13));
    }
    SUBCASE("matches the point-to-point scheme on the equivalent model") {
        const auto model = secondary_equivalent_model(kWeak);
        CHECK(model.sigma_s2 == dt::Approx(0.25).epsilon(1e-15));
        const Allocation alloc{0.7, 0.3};
        CHECK(secondary_distortion(kWeak, alloc) ==
              hda_distortion(model, ChannelSpec{1.0, 1.0}, alloc));
    }
    SUBCASE("negative h1 flips the effective correlation") {
        const CognitiveConfig flipped{1.0, 1.0, -0.5, 0.5, 1.0, 1.0, 0.4};
        CHECK(secondary_equivalent_model(flipped).rho == dt::Approx(-0.4));
    }
    SUBCASE("fully correlated sources, full coherent power: tight endpoint") {
        const auto cfg = with_rho(kWeak, 1.0);
        const double sigma_s = 0.5;  // |h1| sqrt(p1)
        const double coherent = std::sqrt(cfg.p2) + sigma_s;
        CHECK(secondary_distortion(cfg, Allocation{1.0, cfg.p2}) ==
              dt::Approx(1.0 / (1.0 + coherent * coherent / cfg.n2)).epsilon(1e-12));
    }
}

TEST_CASE("weak capacity rectangle") {
    SUBCASE("corners") {
        const auto [r1_0, r2_0] = weak_capacity_bound(kWeak, 0.0);
        CHECK(r1_0 == dt::Approx(0.5 * std::log2(1.0 + 1.0 / 1.25)).epsilon(1e-14));
        CHECK(r2_0 == dt::Approx(0.5 * std::log2(2.0)).epsilon(1e-14));
        const auto [r1_1, r2_1] = weak_capacity_bound(kWeak, 1.0);
        CHECK(r1_1 == dt::Approx(0.5 * std::log2(1.0 + 2.25)).epsilon(1e-14));
        CHECK(r2_1 == 0.0);
    }
    SUBCASE("frozen fixture at rho_x = 0.5") {
        const auto [r1, r2] = weak_capacity_bound(kWeak, 0.5);
        CHECK(r1 == dt::Approx(0.6057520525968559).epsilon(1e-14));
        CHECK(r2 == dt::Approx(0.40367746102880203).epsilon(1e-14));
    }
    SUBCASE("rectangle property: R2 ignores the R1-side parameters") {
        const auto r2_ref = weak_capacity_bound(kWeak, 0.3).second;
        CHECK(weak_capacity_bound({5.0, 1.0, 0.9, 0.2, 1.0, 1.0, 0.0}, 0.3).second ==
              dt::Approx(r2_ref).epsilon(1e-14));
    }
    SUBCASE("regime and range guards") {
        CHECK_THROWS_AS(weak_capacity_bound(kVeryStrong, 0.5), std::domain_error);
        CHECK_THROWS_AS(weak_capacity_bound(kWeak, 1.5), std::invalid_argument);
        CHECK_THROWS_AS(weak_capacity_bound(kWeak, -0.1), std::invalid_argument);
    }
}

TEST_CASE("very-strong capacity bounds") {
    SUBCASE("corners") {
        const auto [r2_0, rsum_0] = very_strong_capacity_bound(kVeryStrong, 0.0);
        CHECK(r2_0 == dt::Approx(0.5 * std::log2(2.0)).epsilon(1e-14));
        CHECK(rsum_0 == dt::Approx(0.5 * std::log2(1.0 + 1.0 + 2.25)).epsilon(1e-14));
        const auto [r2_1, rsum_1] = very_strong_capacity_bound(kVeryStrong, 1.0);
        CHECK(r2_1 == 0.0);
        CHECK(rsum_1 == dt::Approx(0.5 * std::log2(1.0 + 1.0 + 2.25 + 3.0)).epsilon(1e-14));
    }
    SUBCASE("frozen fixture at rho_x = 0.5") {
        const auto [r2, rsum] = very_strong_capacity_bound(kVeryStrong, 0.5);
        CHECK(r2 == dt::Approx(0.40367746102880203).epsilon(1e-14));
        CHECK(rsum == dt::Approx(1.2617809780285065).epsilon(1e-14));
    }
    CHECK_THROWS_AS(very_strong_capacity_bound(kWeak, 0.5), std::domain_error);
}

TEST_CASE("region frontiers") {
    RegionGrid grid;
    grid.gamma_points = 17;
    grid.pa_points = 17;
    grid.rho_x_points = 33;
    grid.split_points = 64;

    SUBCASE("pareto minimality holds pairwise") {
        for (const auto& frontier :
             {inner_region(kWeak, grid), outer_region(kWeak, grid),
              inner_region(kVeryStrong, grid), outer_region(kVeryStrong, grid)}) {
            const auto& pts = frontier.points;
            REQUIRE(!pts.empty());
            for (std::size_t i = 0; i < pts.size(); ++i) {
                for (std::size_t j = 0; j < pts.size(); ++j) {
                    if (i == j) continue;
                    const bool dominates = pts[j].d1 <= pts[i].d1 && pts[j].d2 <= pts[i].d2 &&
                                           (pts[j].d1 < pts[i].d1 || pts[j].d2 < pts[i].d2);
                    CHECK(!dominates);
                }
            }
        }
    }

    SUBCASE("weak outer endpoints map the capacity corners") {
        const auto outer = outer_region(kWeak, grid).points;
        // rho_x = 0 end: min-d2 corner
        const double d2_end = 1.0 / (1.0 + 1.0);
        const double d1_end = 1.0 / (1.0 + 1.0 / 1.25);
        bool found = false;
        for (const auto& pt : outer) {
            if (std::abs(pt.d1 - d1_end) < 1e-12 && std::abs(pt.d2 - d2_end) < 1e-12) {
                found = true;
            }
        }
        CHECK(found);
    }

    SUBCASE("inner frontier is dominated by the outer frontier") {
        // the outer frontier is a sampling of a continuous curve, so the
        // comparison allows one curve-sampling step of slack
        RegionGrid fine;
        fine.gamma_points = 17;
        fine.pa_points = 17;
        fine.rho_x_points = 1025;
        fine.split_points = 512;
        for (const auto& cfg : {with_rho(kWeak, 0.25), with_rho(kVeryStrong, 0.5)}) {
            const auto inner = inner_region(cfg, fine).points;
            const auto outer = outer_region(cfg, fine).points;
            for (const auto& ipt : inner) {
                bool dominated_or_matched = false;
                for (const auto& opt : outer) {
                    if (opt.d1 <= ipt.d1 + 2e-3 && opt.d2 <= ipt.d2 + 2e-3) {
                        dominated_or_matched = true;
                        break;
                    }
                }
                CHECK(dominated_or_matched);
            }
        }
    }

    SUBCASE("fully correlated sources collapse the outer frontier to d2 = 0") {
        const auto outer = outer_region(with_rho(kWeak, 1.0), grid).points;
        for (const auto& pt : outer) CHECK(pt.d2 == 0.0);
    }

    SUBCASE("correlation lets the scheme beat the separation-optimal region") {
        // the rho=0 outer frontier is what optimal separate coding achieves
        // regardless of rho; at rho=0.5 the scheme reaches below its d2 end
        const auto cfg = with_rho(kVeryStrong, 0.5);
        const auto best = optimize_scheme(secondary_equivalent_model(cfg),
                                          ChannelSpec{cfg.p2, cfg.n2}, Scheme::Hda);
        const double separation_end =
            cfg.sigma_v2_2 / (1.0 + cfg.p2 / cfg.n2);  // rho=0 bound at max R2
        CHECK(best.best.distortion < separation_end - 1e-3);
    }

    SUBCASE("degenerate single-point grid returns that point") {
        RegionGrid one;
        one.gamma_points = 1;
        one.pa_points = 1;
        const auto frontier = inner_region(kWeak, one);
        REQUIRE(frontier.points.size() == 1);
        CHECK(frontier.points[0].gamma == 0.0);
        CHECK(frontier.points[0].pa == 0.0);
    }

    SUBCASE("unknown regime is rejected") {
        const CognitiveConfig other{1.0, 1.0, 0.5, 1.01, 1.0, 1.0, 0.0};
        CHECK_THROWS_AS(outer_region(other, grid), std::domain_error);
        CHECK_THROWS_AS(coexistence(other, grid), std::domain_error);
    }
}

TEST_CASE("induced transmit correlation") {
    // full relay with gamma=0: rho_x = h1 sqrt(pa) / (|h1| sqrt(p2)) * ... = sqrt(pa)
    CHECK(induced_rho_x(kWeak, Allocation{0.0, 0.25}) == dt::Approx(0.5).epsilon(1e-12));
    CHECK(induced_rho_x(kWeak, Allocation{0.7, 0.0}) == 0.0);
    // independent sources and gamma=1: analog carries V2 only, uncorrelated with X1
    CHECK(induced_rho_x(kWeak, Allocation{1.0, 0.5}) == 0.0);
}

TEST_CASE("coexistence at the figure configurations") {
    RegionGrid grid;  // defaults
    SUBCASE("weak, independent sources: achievable meets the converse") {
        const auto r = coexistence(kWeak, grid);
        const double truth = 0.5129547378753354;
        CHECK(r.outer == dt::Approx(truth).epsilon(1e-9));
        CHECK(r.achievable == dt::Approx(truth).epsilon(1e-9));
        CHECK(std::abs(r.achievable - r.outer) <= 1e-6);
    }
    SUBCASE("very strong, independent sources: a gap remains") {
        const auto r = coexistence(kVeryStrong, grid);
        CHECK(r.outer == dt::Approx(0.5).epsilon(1e-9));
        CHECK(r.achievable > r.outer + 1e-3);
    }
    SUBCASE("achievable point satisfies the primary constraint") {
        const auto r = coexistence(with_rho(kWeak, 0.3), grid);
        const double threshold = 1.0 / (1.0 + 1.0);
        CHECK(primary_distortion(with_rho(kWeak, 0.3), r.achievable_allocation) <=
              threshold + 1e-9);
        CHECK(r.achievable < 1.0);  // the constraint does not cost everything
    }
    SUBCASE("opposed gains make the constraint infeasible") {
        const CognitiveConfig opposed{1.0, 1.0, -0.5, 0.5, 1.0, 1.0, 0.0};
        CHECK_THROWS_AS(coexistence(opposed, grid), std::runtime_error);
    }
}

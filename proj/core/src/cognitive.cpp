#include "jscc/cognitive.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "jscc/estimators.hpp"
#include "jscc/schemes.hpp"

namespace jscc {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kFeasSlack = 1e-12;

double rate_to_distortion(double sigma2, double rate_bits) {
    return sigma2 * std::exp2(-2.0 * rate_bits);
}

double linspace_at(double lo, double hi, int count, int i) {
    return count <= 1 ? lo : lo + (hi - lo) * i / (count - 1);
}

void check_rho_x(double rho_x) {
    if (!(rho_x >= 0.0 && rho_x <= 1.0)) {
        throw std::invalid_argument("rho_x out of range");
    }
}

// variance of gamma V2 + (1-gamma) h1 X1 and the resulting power scaling
struct AnalogScale {
    double sigma_a2;
    double a;
};

AnalogScale secondary_analog_scale(const CognitiveConfig& cfg, const Allocation& alloc) {
    const double g = alloc.gamma;
    const double sv2 = cfg.sigma_v2_2;
    const double ss2 = cfg.h1 * cfg.h1 * cfg.p1;
    const double cross = cfg.rho * std::sqrt(sv2) * cfg.h1 * std::sqrt(cfg.p1);
    const double sigma_a2 = g * g * sv2 + (1.0 - g) * (1.0 - g) * ss2 +
                            2.0 * g * (1.0 - g) * cross;
    double a = 0.0;
    if (alloc.pa > 0.0) {
        if (sigma_a2 <= kDegenerateEps) {
            throw std::domain_error("analog direction degenerate: sigma_a2 ~ 0 with pa > 0");
        }
        a = alloc.pa / sigma_a2;
    }
    return {sigma_a2, a};
}

void check_secondary_alloc(const CognitiveConfig& cfg, const Allocation& alloc) {
    if (alloc.pa > cfg.p2) throw std::invalid_argument("pa exceeds power budget");
}

struct InnerBest {
    double d2;
    double pa;
};

// Best feasible d2 over pa at a fixed gamma: coarse scan, bisection of
// every feasibility transition, then a local constrained polish. Returns
// nullopt when no pa satisfies the primary's constraint.
std::optional<InnerBest> best_pa_for_gamma(const CognitiveConfig& cfg, double threshold,
                                           double gamma, int pa_points) {
    const auto d1 = [&](double pa) { return primary_distortion(cfg, Allocation{gamma, pa}); };
    const auto d2 = [&](double pa) { return secondary_distortion(cfg, Allocation{gamma, pa}); };
    const auto is_feasible = [&](double pa) { return d1(pa) <= threshold + kFeasSlack; };

    double best = std::numeric_limits<double>::infinity();
    double best_pa = 0.0;
    const auto consider = [&](double pa) {
        if (!is_feasible(pa)) return;
        const double v = d2(pa);
        if (v < best) {
            best = v;
            best_pa = pa;
        }
    };

    std::vector<char> feasible(pa_points);
    for (int i = 0; i < pa_points; ++i) {
        const double pa = linspace_at(0.0, cfg.p2, pa_points, i);
        feasible[i] = is_feasible(pa);
        if (feasible[i]) consider(pa);
    }
    for (int i = 0; i + 1 < pa_points; ++i) {
        if (feasible[i] == feasible[i + 1]) continue;
        double bad = linspace_at(0.0, cfg.p2, pa_points, feasible[i] ? i + 1 : i);
        double good = linspace_at(0.0, cfg.p2, pa_points, feasible[i] ? i : i + 1);
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (bad + good);
            (is_feasible(mid) ? good : bad) = mid;
        }
        consider(good);
    }
    if (!std::isfinite(best)) return std::nullopt;

    // polish a possibly interior minimum around the best grid point
    const double span = cfg.p2 / (pa_points - 1);
    double lo = std::max(0.0, best_pa - span);
    double hi = std::min(cfg.p2, best_pa + span);
    for (int round = 0; round < 24; ++round) {
        double round_best_pa = best_pa;
        for (int i = 0; i < 17; ++i) {
            const double pa = linspace_at(lo, hi, 17, i);
            if (is_feasible(pa)) {
                const double v = d2(pa);
                if (v < best) {
                    best = v;
                    best_pa = round_best_pa = pa;
                }
            }
        }
        const double width = (hi - lo) * 0.25;
        lo = std::max(0.0, round_best_pa - width);
        hi = std::min(cfg.p2, round_best_pa + width);
    }
    return InnerBest{best, best_pa};
}

}  // namespace

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::Weak: return "weak";
        case Regime::VeryStrong: return "very-strong";
        case Regime::Other: return "other";
    }
    return "unknown";
}

Regime classify_regime(const CognitiveConfig& cfg) {
    if (std::abs(cfg.h2) <= 1.0) return Regime::Weak;
    const double r = std::sqrt(cfg.p1 / cfg.p2);
    const bool c1 = std::abs(cfg.h2) >= 1.0;
    const bool c2 = std::abs(cfg.h1 * r + 1.0) >= std::abs(r + cfg.h2);
    const bool c3 = std::abs(cfg.h1 * r - 1.0) >= std::abs(r - cfg.h2);
    return (c1 && c2 && c3) ? Regime::VeryStrong : Regime::Other;
}

SourceModel secondary_equivalent_model(const CognitiveConfig& cfg) {
    const double sign = cfg.h1 < 0.0 ? -1.0 : 1.0;
    return SourceModel{cfg.sigma_v2_2, cfg.h1 * cfg.h1 * cfg.p1, sign * cfg.rho};
}

double primary_distortion(const CognitiveConfig& cfg, const Allocation& alloc) {
    check_secondary_alloc(cfg, alloc);
    const auto scale = secondary_analog_scale(cfg, alloc);
    const double sqa = std::sqrt(scale.a);
    const double g = alloc.gamma;
    const double ph = cfg.p2 - alloc.pa;
    const double sv1 = std::sqrt(cfg.sigma_v1_2);
    const double sv2 = std::sqrt(cfg.sigma_v2_2);

    const double c = 1.0 + (1.0 - g) * sqa * cfg.h1 * cfg.h2;
    const double e_v1y1 = c * std::sqrt(cfg.p1 * cfg.sigma_v1_2) +
                          cfg.h2 * sqa * g * cfg.rho * sv1 * sv2;
    const double e_y12 = c * c * cfg.p1 + scale.a * cfg.h2 * cfg.h2 * g * g * cfg.sigma_v2_2 +
                         cfg.h2 * cfg.h2 * ph +
                         2.0 * sqa * cfg.h2 * g * cfg.rho * std::sqrt(cfg.p1 * cfg.sigma_v2_2) * c +
                         cfg.n1;
    return cfg.sigma_v1_2 - e_v1y1 * e_v1y1 / e_y12;
}

double secondary_distortion(const CognitiveConfig& cfg, const Allocation& alloc) {
    check_secondary_alloc(cfg, alloc);
    return hda_distortion(secondary_equivalent_model(cfg), ChannelSpec{cfg.p2, cfg.n2}, alloc);
}

double induced_rho_x(const CognitiveConfig& cfg, const Allocation& alloc) {
    check_secondary_alloc(cfg, alloc);
    const auto scale = secondary_analog_scale(cfg, alloc);
    const double sqa = std::sqrt(scale.a);
    const double e_x1x2 =
        sqa * (alloc.gamma * std::sqrt(cfg.p1) * cfg.rho * std::sqrt(cfg.sigma_v2_2) +
               (1.0 - alloc.gamma) * cfg.h1 * cfg.p1);
    return e_x1x2 / std::sqrt(cfg.p1 * cfg.p2);
}

RegionFrontier inner_region(const CognitiveConfig& cfg, const RegionGrid& grid) {
    if (grid.gamma_points < 1 || grid.pa_points < 1) {
        throw std::invalid_argument("region grid needs at least one point per axis");
    }
    std::vector<ParetoPoint<RegionPoint>> pts;
    pts.reserve(static_cast<std::size_t>(grid.gamma_points) * grid.pa_points);
    for (int i = 0; i < grid.pa_points; ++i) {
        const double pa = std::min(cfg.p2, linspace_at(0.0, cfg.p2, grid.pa_points, i));
        for (int j = 0; j < grid.gamma_points; ++j) {
            const double g = linspace_at(0.0, 1.0, grid.gamma_points, j);
            const Allocation alloc{g, pa};
            const double d1 = primary_distortion(cfg, alloc);
            const double d2 = secondary_distortion(cfg, alloc);
            pts.push_back({d1, d2, RegionPoint{d1, d2, g, pa, induced_rho_x(cfg, alloc)}});
        }
    }
    RegionFrontier frontier{RegionFrontier::Kind::Inner, {}};
    for (const auto& p : pareto_filter(pts)) frontier.points.push_back(p.payload);
    return frontier;
}

std::pair<double, double> weak_capacity_bound(const CognitiveConfig& cfg, double rho_x) {
    check_rho_x(rho_x);
    if (classify_regime(cfg) != Regime::Weak) {
        throw std::domain_error("weak_capacity_bound requires the weak regime");
    }
    const double boost = 1.0 + cfg.h2 * rho_x * std::sqrt(cfg.p2 / cfg.p1);
    const double residual = cfg.n1 + (1.0 - rho_x * rho_x) * cfg.h2 * cfg.h2 * cfg.p2;
    const double r1 = 0.5 * std::log2(1.0 + cfg.p1 * boost * boost / residual);
    const double r2 = 0.5 * std::log2(1.0 + (1.0 - rho_x * rho_x) * cfg.p2 / cfg.n2);
    return {r1, r2};
}

std::pair<double, double> very_strong_capacity_bound(const CognitiveConfig& cfg, double rho_x) {
    check_rho_x(rho_x);
    if (classify_regime(cfg) != Regime::VeryStrong) {
        throw std::domain_error("very_strong_capacity_bound requires the very-strong regime");
    }
    const double r2 = 0.5 * std::log2(1.0 + (1.0 - rho_x * rho_x) * cfg.p2 / cfg.n2);
    const double rsum = 0.5 * std::log2(1.0 + (cfg.p1 + cfg.h2 * cfg.h2 * cfg.p2 +
                                                2.0 * rho_x * cfg.h2 * std::sqrt(cfg.p1 * cfg.p2)) /
                                                   cfg.n1);
    return {r2, rsum};
}

RegionFrontier outer_region(const CognitiveConfig& cfg, const RegionGrid& grid) {
    const Regime regime = classify_regime(cfg);
    if (regime == Regime::Other) {
        throw std::domain_error("no capacity characterization for this regime");
    }
    if (grid.rho_x_points < 1 || grid.split_points < 2) {
        throw std::invalid_argument("region grid needs rho_x points and >= 2 splits");
    }
    const double dv2 = cfg.sigma_v2_2 * (1.0 - cfg.rho * cfg.rho);

    std::vector<ParetoPoint<RegionPoint>> pts;
    for (int i = 0; i < grid.rho_x_points; ++i) {
        const double rho_x = linspace_at(0.0, 1.0, grid.rho_x_points, i);
        if (regime == Regime::Weak) {
            const auto [r1, r2] = weak_capacity_bound(cfg, rho_x);
            const double d1 = rate_to_distortion(cfg.sigma_v1_2, r1);
            const double d2 = rate_to_distortion(dv2, r2);
            pts.push_back({d1, d2, RegionPoint{d1, d2, kNan, kNan, rho_x}});
        } else {
            const auto [r2_max, rsum] = very_strong_capacity_bound(cfg, rho_x);
            const double top = std::min(r2_max, rsum);
            for (int s = 0; s < grid.split_points; ++s) {
                const double r2 = linspace_at(0.0, top, grid.split_points, s);
                const double r1 = rsum - r2;
                const double d1 = rate_to_distortion(cfg.sigma_v1_2, r1);
                const double d2 = rate_to_distortion(dv2, r2);
                pts.push_back({d1, d2, RegionPoint{d1, d2, kNan, kNan, rho_x}});
            }
        }
    }
    RegionFrontier frontier{RegionFrontier::Kind::Outer, {}};
    for (const auto& p : pareto_filter(pts)) frontier.points.push_back(p.payload);
    return frontier;
}

CoexistenceResult coexistence(const CognitiveConfig& cfg, const RegionGrid& grid) {
    const Regime regime = classify_regime(cfg);
    if (regime == Regime::Other) {
        throw std::domain_error("no capacity characterization for this regime");
    }
    const double threshold = cfg.sigma_v1_2 / (1.0 + cfg.p1 / cfg.n1);
    const double r1_required = 0.5 * std::log2(1.0 + cfg.p1 / cfg.n1);
    const double dv2 = cfg.sigma_v2_2 * (1.0 - cfg.rho * cfg.rho);

    // converse side: tightest D2 over rho_x with the primary held harmless
    GridSpec line{{{0.0, 1.0, std::max(2, grid.rho_x_points)}}, 16, 0.2, 1e-14};
    Objective outer_obj;
    Feasible outer_feasible;
    if (regime == Regime::Weak) {
        outer_obj = [&](std::span<const double> x) {
            return rate_to_distortion(dv2, weak_capacity_bound(cfg, x[0]).second);
        };
        outer_feasible = [&](std::span<const double> x) {
            const double d1 = rate_to_distortion(cfg.sigma_v1_2, weak_capacity_bound(cfg, x[0]).first);
            return d1 <= threshold + kFeasSlack;
        };
    } else {
        outer_obj = [&](std::span<const double> x) {
            const auto [r2_max, rsum] = very_strong_capacity_bound(cfg, x[0]);
            const double r2 = std::min(r2_max, rsum - r1_required);
            return rate_to_distortion(dv2, std::max(0.0, r2));
        };
        outer_feasible = [&](std::span<const double> x) {
            const auto [r2_max, rsum] = very_strong_capacity_bound(cfg, x[0]);
            return std::min(r2_max, rsum - r1_required) >= -kFeasSlack;
        };
    }
    double outer;
    try {
        outer = grid_refine_constrained(outer_obj, outer_feasible, line).value;
    } catch (const std::runtime_error&) {
        throw std::runtime_error("coexistence outer bound infeasible: "
                                 "no rho_x holds the primary harmless");
    }

    const auto ach = min_d2_subject_to_d1(cfg, threshold, grid);
    return CoexistenceResult{outer, ach.d2, ach.allocation};
}

ConstrainedBest min_d2_subject_to_d1(const CognitiveConfig& cfg, double d1_limit,
                                     const RegionGrid& grid) {
    // per-gamma 1-D solve in pa (the optimum usually sits on the
    // feasibility boundary, which a bisection locates exactly), then a
    // shrinking scan over gamma
    const int pa_points = std::max(257, grid.pa_points);
    const auto inner = [&](double g) { return best_pa_for_gamma(cfg, d1_limit, g, pa_points); };

    double best_d2 = std::numeric_limits<double>::infinity();
    double best_gamma = 0.0, best_pa = 0.0;
    const int gamma_points = std::max(65, grid.gamma_points);
    const auto consider = [&](double g) {
        if (const auto r = inner(g)) {
            if (r->d2 < best_d2) {
                best_d2 = r->d2;
                best_gamma = g;
                best_pa = r->pa;
            }
        }
    };
    for (int j = 0; j < gamma_points; ++j) consider(linspace_at(0.0, 1.0, gamma_points, j));
    if (!std::isfinite(best_d2)) {
        throw std::runtime_error("coexistence constraint infeasible: "
                                 "no allocation keeps the primary at its no-secondary level");
    }
    double half = 1.0 / (gamma_points - 1);
    for (int round = 0; round < 14; ++round) {
        const double lo = std::max(0.0, best_gamma - half);
        const double hi = std::min(1.0, best_gamma + half);
        for (int j = 0; j < 17; ++j) consider(linspace_at(lo, hi, 17, j));
        half *= 0.5;
    }
    return ConstrainedBest{best_d2, Allocation{best_gamma, best_pa}};
}

}  // namespace jscc

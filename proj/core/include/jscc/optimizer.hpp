#ifndef JSCC_OPTIMIZER_HPP
#define JSCC_OPTIMIZER_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace jscc {

struct AxisSpec {
    double lower;
    double upper;
    int count;  // >= 2
};

/// Coarse grid + iterative local re-gridding around the incumbent.
struct GridSpec {
    std::vector<AxisSpec> axes;   // at most 3
    int rounds = 6;               // refinement rounds after the coarse pass
    double shrink = 0.2;          // per-round box shrink factor
    double tolerance = 1e-10;     // stop when a round improves less than this
};

GridSpec default_grid_1d(double lower, double upper);
GridSpec default_grid_2d(double lo0, double hi0, double lo1, double hi1);

struct RefineResult {
    std::vector<double> argmin;
    double value;
};

using Objective = std::function<double(std::span<const double>)>;
using Feasible = std::function<bool(std::span<const double>)>;

/// Minimizes f over the box. Deterministic; ties broken toward the
/// lexicographically smallest coordinates. Throws std::domain_error on a
/// non-finite objective value, naming the offending coordinates.
RefineResult grid_refine(const Objective& f, const GridSpec& spec);

/// Same search restricted to points where feasible(x) holds. Throws
/// std::runtime_error when no grid point of the coarse pass is feasible.
RefineResult grid_refine_constrained(const Objective& f, const Feasible& feasible,
                                     const GridSpec& spec);

template <typename Payload>
struct ParetoPoint {
    double d1;
    double d2;
    Payload payload;
};

/// Keeps exactly the points not dominated by any other (dominated:
/// other.d1 <= d1 and other.d2 <= d2 with at least one strict).
/// Duplicate-coordinate points are all kept. Output is ordered by d1
/// ascending, input-stable within ties.
template <typename Payload>
std::vector<ParetoPoint<Payload>> pareto_filter(const std::vector<ParetoPoint<Payload>>& points) {
    const std::size_t n = points.size();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return points[a].d1 < points[b].d1;
    });

    std::vector<ParetoPoint<Payload>> out;
    double prev_min_d2 = std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    while (i < n) {
        // group of equal d1
        std::size_t j = i;
        double group_min = std::numeric_limits<double>::infinity();
        while (j < n && points[idx[j]].d1 == points[idx[i]].d1) {
            group_min = std::min(group_min, points[idx[j]].d2);
            ++j;
        }
        for (std::size_t k = i; k < j; ++k) {
            const auto& p = points[idx[k]];
            if (p.d2 == group_min && p.d2 < prev_min_d2) out.push_back(p);
        }
        prev_min_d2 = std::min(prev_min_d2, group_min);
        i = j;
    }
    return out;
}

}  // namespace jscc

#endif

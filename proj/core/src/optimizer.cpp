#include "jscc/optimizer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace jscc {

namespace {

void check_spec(const GridSpec& spec) {
    if (spec.axes.empty() || spec.axes.size() > 3) {
        throw std::invalid_argument("grid_refine supports 1 to 3 axes");
    }
    for (const auto& ax : spec.axes) {
        if (!(ax.lower <= ax.upper)) throw std::invalid_argument("axis lower must be <= upper");
        if (ax.count < 2) throw std::invalid_argument("axis count must be >= 2");
    }
    if (!(spec.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (!(spec.shrink > 0.0 && spec.shrink < 1.0)) {
        throw std::invalid_argument("shrink must be in (0, 1)");
    }
    if (spec.rounds < 0) throw std::invalid_argument("rounds must be nonnegative");
}

[[noreturn]] void throw_non_finite(std::span<const double> x) {
    std::ostringstream os;
    os << "objective not finite at (";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ")";
    throw std::domain_error(os.str());
}

struct Box {
    std::vector<double> lo, hi;
};

// One full sweep of the box grid, lexicographic order. Keeps the first
// strict improvement, so ties resolve to the smallest coordinates.
void sweep(const Objective& f, const Feasible* feasible, const Box& box,
           const std::vector<int>& counts, RefineResult& best, bool& found_any) {
    const std::size_t k = counts.size();
    std::vector<int> iv(k, 0);
    std::vector<double> x(k);
    while (true) {
        for (std::size_t d = 0; d < k; ++d) {
            x[d] = counts[d] == 1
                       ? box.lo[d]
                       : box.lo[d] + (box.hi[d] - box.lo[d]) * iv[d] / (counts[d] - 1);
        }
        if (!feasible || (*feasible)(x)) {
            const double v = f(x);
            if (!std::isfinite(v)) throw_non_finite(x);
            if (!found_any || v < best.value) {
                best.value = v;
                best.argmin = x;
                found_any = true;
            }
        }
        // advance the innermost axis last so iteration is lexicographic
        std::size_t d = k;
        while (d > 0) {
            --d;
            if (++iv[d] < counts[d]) break;
            iv[d] = 0;
            if (d == 0) return;
        }
    }
}

RefineResult refine(const Objective& f, const Feasible* feasible, const GridSpec& spec) {
    check_spec(spec);
    const std::size_t k = spec.axes.size();
    Box box;
    std::vector<int> counts;
    for (const auto& ax : spec.axes) {
        box.lo.push_back(ax.lower);
        box.hi.push_back(ax.upper);
        counts.push_back(ax.count);
    }

    RefineResult best{{}, std::numeric_limits<double>::infinity()};
    bool found = false;
    sweep(f, feasible, box, counts, best, found);
    if (!found) throw std::runtime_error("no feasible point on the coarse grid");

    for (int round = 0; round < spec.rounds; ++round) {
        Box next;
        next.lo.resize(k);
        next.hi.resize(k);
        for (std::size_t d = 0; d < k; ++d) {
            const double half = (box.hi[d] - box.lo[d]) * spec.shrink / 2.0;
            next.lo[d] = std::max(spec.axes[d].lower, best.argmin[d] - half);
            next.hi[d] = std::min(spec.axes[d].upper, best.argmin[d] + half);
        }
        const double before = best.value;
        sweep(f, feasible, next, counts, best, found);
        box = next;
        // A feasibility boundary makes the value first-order in the grid
        // spacing, and a round can improve by zero when the incumbent
        // falls on the new lattice; run constrained searches to the end.
        if (!feasible && before - best.value < spec.tolerance) break;
    }
    return best;
}

}  // namespace

GridSpec default_grid_1d(double lower, double upper) {
    return GridSpec{{{lower, upper, 64}}, 6, 0.2, 1e-10};
}

GridSpec default_grid_2d(double lo0, double hi0, double lo1, double hi1) {
    return GridSpec{{{lo0, hi0, 64}, {lo1, hi1, 64}}, 6, 0.2, 1e-10};
}

RefineResult grid_refine(const Objective& f, const GridSpec& spec) {
    return refine(f, nullptr, spec);
}

RefineResult grid_refine_constrained(const Objective& f, const Feasible& feasible,
                                     const GridSpec& spec) {
    return refine(f, &feasible, spec);
}

}  // namespace jscc

#ifndef JSCC_COGNITIVE_HPP
#define JSCC_COGNITIVE_HPP

#include <utility>
#include <vector>

#include "jscc/model.hpp"
#include "jscc/optimizer.hpp"

namespace jscc {

enum class Regime { Weak, VeryStrong, Other };

std::string_view to_string(Regime regime);

/// Weak iff |h2| <= 1 (checked first); very-strong iff the three gain
/// inequalities hold; other when neither set does.
Regime classify_regime(const CognitiveConfig& cfg);

/// One point of a distortion-region sweep. gamma/pa apply to inner
/// points, rho_x to outer points; fields that do not apply are NaN
/// (inner points carry the transmit correlation induced by their
/// allocation).
struct RegionPoint {
    double d1;
    double d2;
    double gamma;
    double pa;
    double rho_x;
};

struct RegionFrontier {
    enum class Kind { Inner, Outer };
    Kind kind;
    std::vector<RegionPoint> points;  // Pareto-minimal, d1 ascending
};

/// Sweep resolutions for the region and coexistence computations.
struct RegionGrid {
    int gamma_points = 64;
    int pa_points = 64;
    int rho_x_points = 257;
    int split_points = 256;  // sum-rate split per rho_x (very-strong outer)
};

/// The point-to-point problem the secondary user faces once the primary
/// transmits uncoded: source V2 against interference h1 X1.
SourceModel secondary_equivalent_model(const CognitiveConfig& cfg);

/// Primary receiver's linear-MMSE distortion when the secondary uses the
/// allocation (gamma, pa) of its own budget p2.
double primary_distortion(const CognitiveConfig& cfg, const Allocation& alloc);

/// Secondary distortion via the auxiliary-variable scheme under the
/// interference substitution.
double secondary_distortion(const CognitiveConfig& cfg, const Allocation& alloc);

/// Correlation E[X1 X2]/sqrt(P1 P2) induced by the secondary's analog
/// component.
double induced_rho_x(const CognitiveConfig& cfg, const Allocation& alloc);

/// Achievable (D1, D2) pairs over the (gamma, pa) grid, Pareto-filtered.
RegionFrontier inner_region(const CognitiveConfig& cfg, const RegionGrid& grid = {});

/// Rectangle corner rates (R1, R2) in bits for the weak regime at
/// transmit correlation rho_x in [0, 1].
std::pair<double, double> weak_capacity_bound(const CognitiveConfig& cfg, double rho_x);

/// (R2, R1+R2) bounds in bits for the very-strong regime.
std::pair<double, double> very_strong_capacity_bound(const CognitiveConfig& cfg, double rho_x);

/// Converse frontier from the regime's capacity region through
/// D = sigma^2 2^(-2R), swept over rho_x (and the sum-rate split in the
/// very-strong case), Pareto-filtered. Throws for the "other" regime.
RegionFrontier outer_region(const CognitiveConfig& cfg, const RegionGrid& grid = {});

struct ConstrainedBest {
    double d2;
    Allocation allocation;
};

/// Smallest achievable D2 over (gamma, pa) subject to D1 <= d1_limit.
/// Nested search: a per-gamma scan in pa with bisection of every
/// feasibility boundary, then a shrinking sweep over gamma. Throws
/// std::runtime_error when no allocation is feasible.
ConstrainedBest min_d2_subject_to_d1(const CognitiveConfig& cfg, double d1_limit,
                                     const RegionGrid& grid = {});

struct CoexistenceResult {
    double outer;       // converse on D2 with the primary held harmless
    double achievable;  // best D2 subject to D1 <= no-secondary level
    Allocation achievable_allocation{1.0, 0.0};
};

/// Secondary distortion under the constraint that the primary's
/// distortion does not exceed its no-secondary value
/// sigma_v1^2/(1 + P1/N1).
CoexistenceResult coexistence(const CognitiveConfig& cfg, const RegionGrid& grid = {});

}  // namespace jscc

#endif

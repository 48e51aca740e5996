#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "okishio/dense.hpp"
#include "okishio/equilibrium.hpp"
#include "okishio/linear_economy.hpp"
#include "okishio/technical_change.hpp"

namespace okishio {

/// Tolerance for "lies on the constant-value hyperplane V".
inline constexpr double kOnHyperplaneTolerance = 1e-10;
/// Proposals tried by the samplers before giving up.
inline constexpr int kMaxProposals = 10'000;

/// Wage-bundle space geometry for one viable change.
///
/// P = { b : p . b = alpha } bounds the bundles that are more expensive at
/// the old prices and keep the cost reduction below the labor-cost rise.
/// V = { b : newvalues . b = beta } holds the bundles that keep the value of
/// the wage bundle (and hence exploitation) constant.
struct WageRegion {
    double alpha = 0.0;
    double beta = 0.0;
    Vector prices;         ///< normal of P
    Vector new_values;     ///< normal of V
    Vector x_intercepts;   ///< alpha / p_j
    Vector y_intercepts;   ///< beta / newvalue_j
    double exploitation = 0.0;  ///< e = (1 - beta) / beta
    double g = 0.0;             ///< alpha - 1
    bool feasible = false;      ///< some y_j > x_j

    std::size_t sectors() const { return prices.size(); }
    /// Sector with the largest y_j / x_j, ties to the lowest index.
    std::size_t best_pivot() const;
};

/// p_j / newvalue_j > (1 + e)(1 + g) for some j.
bool condition_11_holds(const Vector& prices, const Vector& new_values, double exploitation, double g);

/// Builds P and V from pre-change prices, post-change values and the
/// pre-change bundle value. Throws Infeasible if the change is not viable.
WageRegion build_region(const Equilibrium& pre, const Vector& new_values, double bundle_value,
                        const ChangeClassification& cls);

/// Recomputes everything needed for `build_region` from scratch.
WageRegion region_for_change(const Technology& tech, const WageBundle& bundle, const TechChange& tc);

struct RegionMembership {
    bool on_v = false;
    bool above_p = false;
    bool below_v = false;
    bool nonnegative = false;

    bool constant_exploitation() const { return on_v && above_p && nonnegative; }
    bool rising_exploitation() const { return below_v && above_p && nonnegative; }
};

RegionMembership membership(const WageRegion& region, const Vector& bundle);

enum class SamplingKind {
    /// Residual value spread over non-pivot sectors in proportion to `weights`.
    Proportional,
    /// All non-pivot components equal.
    EqualSplit,
};

struct SamplingStrategy {
    SamplingKind kind = SamplingKind::Proportional;
    /// Pivot sector (0-based); defaults to `WageRegion::best_pivot()`.
    std::optional<std::size_t> pivot;
    /// Fixed pivot quantity instead of a uniform draw on (x_k, y_k).
    std::optional<double> pivot_value;
    /// Residual weights for Proportional, usually the pre-change bundle.
    /// Empty or zero-valued weights fall back to equal quantities.
    Vector weights;
};

/// A bundle on V, strictly above P, nonnegative. Deterministic in (region, seed, strategy).
/// Throws Infeasible or SamplingExhausted.
WageBundle sample_constant_exploitation(const WageRegion& region, std::uint64_t seed,
                                        const SamplingStrategy& strategy = {});

/// A bundle strictly below V and strictly above P: a constant-exploitation
/// sample shrunk radially towards the origin but not past P.
WageBundle sample_rising_exploitation(const WageRegion& region, std::uint64_t seed,
                                      const SamplingStrategy& strategy = {});

/// A viable CU-LS change built by adding epsilon to every input of sector i
/// and cutting its labor into the interval that guarantees the ratio condition.
struct SynthesizedChange {
    TechChange change;
    std::size_t pivot = 0;  ///< argmax_k p_k / lambda_k
    double phi = 0.0;       ///< (value of b) * p_pivot / lambda_pivot
    double epsilon = 0.0;
    std::pair<double, double> labor_interval;  ///< open interval for the new labor coefficient
};

/// Throws NotInB, InvalidFraction or InvalidSector.
SynthesizedChange synthesize_culs_change(const Technology& tech, const WageBundle& bundle, const Equilibrium& eq,
                                         std::size_t sector, double epsilon_frac = 0.5, double labor_frac = 0.5);

}  // namespace okishio

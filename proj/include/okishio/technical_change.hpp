#pragma once

#include <cstddef>

#include "okishio/dense.hpp"
#include "okishio/equilibrium.hpp"
#include "okishio/linear_economy.hpp"

namespace okishio {

/// Replacement of the technique of a single sector: a new input column and a
/// new direct-labor coefficient. Sector indices are 0-based.
class TechChange {
public:
    /// Validates new_column >= 0, new_labor > 0. Compatibility with a given
    /// technology is checked by `apply`.
    TechChange(std::size_t sector, Vector new_column, double new_labor);

    /// The change that keeps sector `sector` exactly as it is.
    static TechChange identity(const Technology& tech, std::size_t sector);

    std::size_t sector() const { return sector_; }
    const Vector& new_column() const { return new_column_; }
    double new_labor() const { return new_labor_; }

    friend bool operator==(const TechChange&, const TechChange&) = default;

private:
    std::size_t sector_;
    Vector new_column_;
    double new_labor_;
};

/// Classification of a change against the incumbent technique at given prices.
struct ChangeClassification {
    bool viable = false;
    bool culs = false;
    double old_cost = 0.0;   ///< p A_{*i} + w L_i
    double new_cost = 0.0;   ///< p Abar_{*i} + w Lbar_i
    double cost_drop = 0.0;  ///< old_cost - new_cost
    double g = 0.0;          ///< cost_drop / Lbar_i
    double alpha = 0.0;      ///< (p A_{*i} + L_i - p Abar_{*i}) / Lbar_i = 1 + g
};

enum class CulsRule {
    Strict,  ///< every input coefficient rises strictly
    Weak,    ///< inputs rise weakly, at least one strictly (not used by the synthesis pipelines)
};

/// Classifies at prices `prices` and nominal wage `wage`. With the usual
/// normalization the wage is 1; other values let callers check homogeneity.
ChangeClassification classify_at(const Technology& tech, const Vector& prices, double wage, const TechChange& tc,
                                 CulsRule rule = CulsRule::Strict);

/// Classifies at the pre-change equilibrium prices with unit wage.
ChangeClassification classify(const Technology& tech, const Equilibrium& eq, const TechChange& tc,
                              CulsRule rule = CulsRule::Strict);

/// Replaces column i of A and element i of L; the result is revalidated
/// (throws NotProductive / Decomposable).
Technology apply(const Technology& tech, const TechChange& tc);

struct PropertyReport {
    bool more_expensive = false;      ///< P1: p bbar > 1
    bool constant_value = false;      ///< P2: |Lambda b - Lambdabar bbar| <= 1e-9
    bool bounded_reduction = false;   ///< P3: 0 < cost_drop < Lbar_i (p bbar - 1)
    bool new_bundle_in_b1 = false;    ///< 0 < Lambdabar bbar <= 1
    double new_wage_at_old_prices = 0.0;
    double old_bundle_value = 0.0;
    double new_bundle_value = 0.0;

    bool all() const { return more_expensive && constant_value && bounded_reduction && new_bundle_in_b1; }
};

/// Evaluates the three sufficient conditions for a falling profit rate
/// with constant exploitation, all at pre-change prices `eq.prices`.
PropertyReport check_properties(const Technology& tech, const TechChange& tc, const Equilibrium& eq,
                                const Vector& values, const Vector& new_values, const WageBundle& bundle,
                                const WageBundle& new_bundle);

}  // namespace okishio

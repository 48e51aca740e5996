#include "okishio/technical_change.hpp"

#include <cmath>

#include "okishio/error.hpp"

namespace okishio {

namespace {

void require_sector(const Technology& tech, const TechChange& tc) {
    if (tc.sector() >= tech.sectors()) {
        throw EconomyError(ErrorKind::InvalidSector, "sector " + std::to_string(tc.sector() + 1) +
                                                         " out of range 1.." + std::to_string(tech.sectors()));
    }
    if (tc.new_column().size() != tech.sectors())
        throw EconomyError(ErrorKind::DimensionMismatch, "new input column length differs from the number of sectors");
}

}  // namespace

TechChange::TechChange(std::size_t sector, Vector new_column, double new_labor)
    : sector_(sector), new_column_(std::move(new_column)), new_labor_(new_labor) {
    for (double v : new_column_)
        if (!std::isfinite(v) || v < 0.0)
            throw EconomyError(ErrorKind::InvalidInput, "new input column must be nonnegative");
    if (!std::isfinite(new_labor_) || new_labor_ <= 0.0)
        throw EconomyError(ErrorKind::InvalidInput, "new labor coefficient must be positive");
}

TechChange TechChange::identity(const Technology& tech, std::size_t sector) {
    if (sector >= tech.sectors()) throw EconomyError(ErrorKind::InvalidSector, "sector out of range");
    return TechChange(sector, tech.inputs().column(sector), tech.labor()[sector]);
}

ChangeClassification classify_at(const Technology& tech, const Vector& prices, double wage, const TechChange& tc,
                                 CulsRule rule) {
    require_sector(tech, tc);
    const std::size_t i = tc.sector();
    const Vector old_column = tech.inputs().column(i);
    const double old_labor = tech.labor()[i];

    ChangeClassification c;
    const double old_material = dot(prices, old_column);
    const double new_material = dot(prices, tc.new_column());
    c.old_cost = old_material + wage * old_labor;
    c.new_cost = new_material + wage * tc.new_labor();
    c.cost_drop = c.old_cost - c.new_cost;
    c.viable = c.cost_drop > kStrictMargin * wage;
    c.g = c.cost_drop / (wage * tc.new_labor());
    c.alpha = 1.0 + c.g;

    bool all_rise = true;
    bool none_fall = true;
    bool some_rise = false;
    for (std::size_t j = 0; j < old_column.size(); ++j) {
        const double up = tc.new_column()[j] - old_column[j];
        all_rise = all_rise && up > kStrictMargin;
        none_fall = none_fall && up >= 0.0;
        some_rise = some_rise || up > kStrictMargin;
    }
    const bool labor_saving = old_labor - tc.new_labor() > kStrictMargin;
    c.culs = labor_saving && (rule == CulsRule::Strict ? all_rise : (none_fall && some_rise));
    return c;
}

ChangeClassification classify(const Technology& tech, const Equilibrium& eq, const TechChange& tc, CulsRule rule) {
    return classify_at(tech, eq.prices, 1.0, tc, rule);
}

Technology apply(const Technology& tech, const TechChange& tc) {
    require_sector(tech, tc);
    Matrix inputs = tech.inputs();
    inputs.set_column(tc.sector(), tc.new_column());
    Vector labor = tech.labor();
    labor[tc.sector()] = tc.new_labor();
    return Technology(std::move(inputs), std::move(labor));
}

PropertyReport check_properties(const Technology& tech, const TechChange& tc, const Equilibrium& eq,
                                const Vector& values, const Vector& new_values, const WageBundle& bundle,
                                const WageBundle& new_bundle) {
    const ChangeClassification c = classify(tech, eq, tc);

    PropertyReport r;
    r.new_wage_at_old_prices = dot(eq.prices, new_bundle.quantities());
    r.old_bundle_value = value_of_bundle(values, bundle);
    r.new_bundle_value = value_of_bundle(new_values, new_bundle);

    r.more_expensive = r.new_wage_at_old_prices > 1.0 + kStrictMargin;
    r.constant_value = std::abs(r.old_bundle_value - r.new_bundle_value) <= kEqualityTolerance;
    // Upper bound compared per unit of new labor, the same scale as the
    // alpha offset of the price hyperplane.
    r.bounded_reduction =
        c.viable && c.g < r.new_wage_at_old_prices - 1.0 - kStrictMargin;
    r.new_bundle_in_b1 = r.new_bundle_value > 0.0 && r.new_bundle_value <= 1.0;
    return r;
}

}  // namespace okishio

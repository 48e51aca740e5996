#include "okishio/equilibrium.hpp"

#include <cmath>

#include "okishio/error.hpp"

namespace okishio {

Matrix augmented_matrix(const Technology& tech, const WageBundle& bundle) {
    if (bundle.size() != tech.sectors())
        throw EconomyError(ErrorKind::DimensionMismatch, "wage bundle length differs from the number of sectors");
    return tech.inputs() + outer(bundle.quantities(), tech.labor());
}

Equilibrium uniform_profit_rate(const Technology& tech, const WageBundle& bundle, const PerronOptions& options) {
    const Matrix m = augmented_matrix(tech, bundle);
    const PerronResult perron = perron_left(m, options);

    const double wage = dot(perron.left, bundle.quantities());
    if (!(wage > 1e-14)) {
        throw EconomyError(ErrorKind::DegenerateNormalization, "eigenvector has p.b <= 1e-14");
    }

    Equilibrium eq;
    eq.prices = scaled(perron.left, 1.0 / wage);
    eq.rho = perron.rho;
    eq.profit_rate = 1.0 / perron.rho - 1.0;
    eq.iterations = perron.iterations;
    eq.residual = norm_inf(subtract(eq.prices, scaled(left_multiply(eq.prices, m), 1.0 + eq.profit_rate)));
    return eq;
}

double max_profit_rate(const Technology& tech) {
    return 1.0 / tech.input_spectral_radius() - 1.0;
}

std::size_t max_price_value_sector(const Vector& prices, const Vector& values) {
    if (prices.size() != values.size() || prices.empty())
        throw EconomyError(ErrorKind::DimensionMismatch, "prices and values differ in length");
    std::size_t best = 0;
    for (std::size_t k = 1; k < prices.size(); ++k)
        if (prices[k] / values[k] > prices[best] / values[best]) best = k;
    return best;
}

AssumptionBReport assess_assumption_b(const Vector& prices, const Vector& values, const WageBundle& bundle) {
    AssumptionBReport report;
    report.bundle_value = value_of_bundle(values, bundle);
    report.argmax = max_price_value_sector(prices, values);
    report.max_ratio = prices[report.argmax] / values[report.argmax];
    report.in_b1 = report.bundle_value > 0.0 && report.bundle_value <= 1.0;
    report.in_b2 = report.in_b1 && 1.0 / report.bundle_value < report.max_ratio - kStrictMargin;
    return report;
}

AssumptionBReport check_assumption_B(const Technology& tech, const WageBundle& bundle) {
    const Equilibrium eq = uniform_profit_rate(tech, bundle);
    return assess_assumption_b(eq.prices, labor_values(tech), bundle);
}

}  // namespace okishio

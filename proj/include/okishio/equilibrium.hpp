#pragma once

#include <cstddef>

#include "okishio/dense.hpp"
#include "okishio/linear_economy.hpp"
#include "okishio/perron.hpp"

namespace okishio {

/// Margin applied to the strict inequality 1/vb < max_k p_k / lambda_k.
inline constexpr double kStrictMargin = 1e-12;

/// Prices of production and the uniform profit rate for (A, L, b).
struct Equilibrium {
    Vector prices;          ///< normalized so that prices . b = 1 (nominal wage of one)
    double profit_rate = 0.0;
    double rho = 0.0;       ///< spectral radius of M = A + b L
    double residual = 0.0;  ///< || p - (1 + pi) p M ||_inf
    int iterations = 0;
};

/// M = A + b L.
Matrix augmented_matrix(const Technology& tech, const WageBundle& bundle);

/// Solves p = (1 + pi) p M, p b = 1 for the left Perron vector of M.
/// Throws NoConvergence or DegenerateNormalization.
Equilibrium uniform_profit_rate(const Technology& tech, const WageBundle& bundle,
                                const PerronOptions& options = {});

/// R with 1 + R = 1 / rho(A): the profit rate at a zero wage bundle.
double max_profit_rate(const Technology& tech);

struct AssumptionBReport {
    bool in_b1 = false;        ///< 0 < vb <= 1
    bool in_b2 = false;        ///< 1 / vb < max_k p_k / lambda_k (strict, margin 1e-12)
    double max_ratio = 0.0;    ///< max_k p_k / lambda_k
    std::size_t argmax = 0;    ///< lowest index attaining the maximum (0-based)
    double bundle_value = 0.0;

    bool in_b() const { return in_b1 && in_b2; }
};

/// Evaluates the admissibility sets from already computed prices and values.
AssumptionBReport assess_assumption_b(const Vector& prices, const Vector& values, const WageBundle& bundle);

AssumptionBReport check_assumption_B(const Technology& tech, const WageBundle& bundle);

/// Index of the maximum of p_k / lambda_k, ties to the lowest index.
std::size_t max_price_value_sector(const Vector& prices, const Vector& values);

}  // namespace okishio

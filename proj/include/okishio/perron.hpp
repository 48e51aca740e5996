#pragma once

#include <cstddef>
#include <vector>

#include "okishio/dense.hpp"

namespace okishio {

/// Entries at or below this are treated as structural zeros.
inline constexpr double kPatternThreshold = 1e-14;

struct PerronOptions {
    double tolerance = 1e-13;
    int max_iterations = 10'000;
};

/// Dominant eigenpair of a nonnegative irreducible matrix.
struct PerronResult {
    double rho = 0.0;
    Vector left;  ///< left eigenvector, strictly positive, scaled to ||.||_inf = 1
    int iterations = 0;
};

/// Power iteration x <- x M for the left Perron vector of a nonnegative
/// irreducible matrix. Stops once the Collatz-Wielandt bracket
/// [min_j (xM)_j / x_j, max_j (xM)_j / x_j] is narrower than the tolerance.
/// Matrices with an all-zero diagonal are shifted by ||M||_inf first.
///
/// Throws EconomyError(NoConvergence) when the bracket does not close.
PerronResult perron_left(const Matrix& m, const PerronOptions& options = {});

/// Strongly connected components of the graph with an arc r -> c for every
/// entry m(r, c) > kPatternThreshold. Components are listed in discovery order.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Matrix& m);

bool is_strongly_connected(const Matrix& m);

/// Spectral radius of any square nonnegative matrix: the maximum over
/// irreducible diagonal blocks of its Frobenius normal form.
double spectral_radius(const Matrix& m, const PerronOptions& options = {});

}  // namespace okishio

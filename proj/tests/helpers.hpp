#pragma once

#include <cstdint>
#include <optional>

#include "okishio/dense.hpp"
#include "okishio/error.hpp"
#include "okishio/linear_economy.hpp"
#include "okishio/random.hpp"
#include "oracles.hpp"

namespace testing {

using namespace okishio;

/// Dense positive n x n matrix rescaled so that rho = target (oracle rho).
inline Matrix random_input_matrix(Rng& rng, std::size_t n, double target) {
    Matrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.uniform(0.0, 0.3);
    return (target / oracle::power_rho(a)) * a;
}

inline Vector random_vector(Rng& rng, std::size_t n, double lo, double hi) {
    Vector v(n);
    for (double& x : v) x = rng.uniform(lo, hi);
    return v;
}

inline Technology example_technology() {
    return Technology(Matrix{{0.35, 0.05, 0.25}, {0.15, 0.45, 0.05}, {0.15, 0.15, 0.35}}, {0.2, 0.15, 0.25});
}

inline WageBundle example_bundle() {
    return WageBundle({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
}

/// Kind of the EconomyError thrown by `fn`, or nullopt if it returns normally.
template <class F>
std::optional<ErrorKind> error_kind(F&& fn) {
    try {
        fn();
    } catch (const EconomyError& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace testing

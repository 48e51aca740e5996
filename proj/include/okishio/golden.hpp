#pragma once

#include <string>
#include <vector>

#include "okishio/dense.hpp"
#include "okishio/linear_economy.hpp"
#include "okishio/technical_change.hpp"

namespace okishio::golden {

/// Published three-sector example: a CU-LS change in sector 3 followed by a
/// wage bundle that keeps exploitation at 0.75 while the profit rate falls.
Technology example_technology();
WageBundle example_bundle();
TechChange example_change();
/// The published post-change bundle, at its printed precision.
WageBundle example_new_bundle();
/// The published uniform draw for the second bundle component.
inline constexpr double kExamplePivotDraw = 1.170977;

inline constexpr double kGoldenTolerance = 1e-5;

struct FixtureCheck {
    std::string name;
    Vector expected;
    Vector actual;

    double max_error() const;
    bool ok() const { return max_error() <= kGoldenTolerance; }
};

struct GoldenReport {
    std::vector<FixtureCheck> checks;
    double seconds = 0.0;

    bool all_ok() const;
};

/// Recomputes every published number. `perturb` nudges A(1,1) by +0.02 as a
/// negative control.
GoldenReport reproduce_example(bool perturb = false);

}  // namespace okishio::golden

#include <doctest.h>

#include "helpers.hpp"
#include "okishio/equilibrium.hpp"
#include "okishio/golden.hpp"
#include "okishio/synthesis.hpp"
#include "okishio/technical_change.hpp"

using namespace okishio;
using testing::error_kind;

namespace {

TechChange example_change() { return TechChange(2, {0.27, 0.07, 0.37}, 0.18); }

/// Random economy with b scaled so that its value lies in (0.3, 0.9).
struct Drawn {
    Technology tech;
    WageBundle bundle;
};

Drawn draw_economy(Rng& rng, std::size_t n) {
    Technology tech(testing::random_input_matrix(rng, n, rng.uniform(0.3, 0.8)),
                    testing::random_vector(rng, n, 0.05, 0.5));
    const Vector raw = testing::random_vector(rng, n, 0.01, 1.0);
    const double target = rng.uniform(0.3, 0.9);
    WageBundle b(scaled(raw, target / dot(labor_values(tech), raw)));
    return {std::move(tech), std::move(b)};
}

}  // namespace

TEST_CASE("classification of the example change") {
    const Technology tech = testing::example_technology();
    const Equilibrium eq = uniform_profit_rate(tech, testing::example_bundle());
    const ChangeClassification c = classify(tech, eq, example_change());
    CHECK(c.viable);
    CHECK(c.culs);
    CHECK(c.old_cost == doctest::Approx(0.9272727).epsilon(1e-7));
    CHECK(c.new_cost == doctest::Approx(0.9172727).epsilon(1e-7));
    CHECK(c.cost_drop == doctest::Approx(0.01).epsilon(1e-10));
    CHECK(c.g == doctest::Approx(0.0555556).epsilon(1e-7));
    CHECK(c.alpha == doctest::Approx(1.0555556).epsilon(1e-7));
    CHECK(c.alpha == 1.0 + c.g);
}

TEST_CASE("post-change values of the example") {
    const Technology changed = apply(testing::example_technology(), example_change());
    const Vector values = labor_values(changed);
    CHECK(values[0] == doctest::Approx(0.5511364).epsilon(1e-7));
    CHECK(values[1] == doctest::Approx(0.4797078).epsilon(1e-7));
    CHECK(values[2] == doctest::Approx(0.5752165).epsilon(1e-7));
    const Vector series = oracle::series_values(changed.inputs(), changed.labor(), 400);
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(series[j] - values[j]) <= 1e-10);
}

TEST_CASE("a cost-raising change is not viable") {
    const Technology tech = testing::example_technology();
    const Equilibrium eq = uniform_profit_rate(tech, testing::example_bundle());
    const ChangeClassification c = classify(tech, eq, TechChange(2, {0.27, 0.07, 0.37}, 0.24));
    CHECK_FALSE(c.viable);
    CHECK(c.culs);
    CHECK(c.cost_drop < 0.0);

    const ChangeClassification same = classify(tech, eq, TechChange::identity(tech, 1));
    CHECK_FALSE(same.viable);
    CHECK_FALSE(same.culs);
    CHECK(same.cost_drop == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("strict and weak CU-LS rules") {
    const Technology tech = testing::example_technology();
    const Equilibrium eq = uniform_profit_rate(tech, testing::example_bundle());
    // First input unchanged, the others rise.
    const TechChange tc(2, {0.25, 0.07, 0.37}, 0.18);
    CHECK_FALSE(classify(tech, eq, tc, CulsRule::Strict).culs);
    CHECK(classify(tech, eq, tc, CulsRule::Weak).culs);
    // Labor rises: neither rule applies.
    const TechChange more_labor(2, {0.27, 0.07, 0.37}, 0.26);
    CHECK_FALSE(classify(tech, eq, more_labor, CulsRule::Weak).culs);
    // No input rises strictly: weak rule rejects too.
    CHECK_FALSE(classify(tech, eq, TechChange(2, {0.25, 0.05, 0.35}, 0.18), CulsRule::Weak).culs);
}

TEST_CASE("classification is homogeneous in prices and wage") {
    const Technology tech = testing::example_technology();
    const Equilibrium eq = uniform_profit_rate(tech, testing::example_bundle());
    const ChangeClassification base = classify_at(tech, eq.prices, 1.0, example_change());
    for (double k : {0.5, 2.0, 17.0}) {
        const ChangeClassification c = classify_at(tech, scaled(eq.prices, k), k, example_change());
        CHECK(c.viable == base.viable);
        CHECK(c.culs == base.culs);
        CHECK(c.cost_drop == doctest::Approx(k * base.cost_drop).epsilon(1e-12));
    }
}

TEST_CASE("apply validates the changed technology") {
    const Technology tech = testing::example_technology();
    CHECK(error_kind([&] { apply(tech, TechChange(3, {0.1, 0.1, 0.1}, 0.1)); }) == ErrorKind::InvalidSector);
    CHECK(error_kind([&] { apply(tech, TechChange(0, {0.1, 0.1}, 0.1)); }) == ErrorKind::DimensionMismatch);
    CHECK(error_kind([&] { apply(tech, TechChange(0, {2.0, 2.0, 2.0}, 0.1)); }) == ErrorKind::NotProductive);
    CHECK(error_kind([&] { apply(tech, TechChange(0, {0.0, 0.0, 0.0}, 0.1)); }) == ErrorKind::Decomposable);
    CHECK(error_kind([] { TechChange(0, {0.1, -0.1}, 0.1); }) == ErrorKind::InvalidInput);
    CHECK(error_kind([] { TechChange(0, {0.1, 0.1}, 0.0); }) == ErrorKind::InvalidInput);
    CHECK(apply(tech, TechChange::identity(tech, 2)).inputs() == tech.inputs());
}

TEST_CASE("properties of the example with the sampled bundle") {
    const Technology tech = testing::example_technology();
    const WageBundle b = testing::example_bundle();
    const Equilibrium eq = uniform_profit_rate(tech, b);
    const Technology changed = apply(tech, example_change());
    const Vector values = labor_values(tech);
    const Vector new_values = labor_values(changed);
    const WageRegion region = region_for_change(tech, b, example_change());

    SamplingStrategy strategy;
    strategy.kind = SamplingKind::EqualSplit;
    strategy.pivot = 1;
    strategy.pivot_value = golden::kExamplePivotDraw;
    const WageBundle b_bar = sample_constant_exploitation(region, 0, strategy);

    const PropertyReport r = check_properties(tech, example_change(), eq, values, new_values, b, b_bar);
    CHECK(r.more_expensive);
    CHECK(r.constant_value);
    CHECK(r.bounded_reduction);
    CHECK(r.new_bundle_in_b1);
    CHECK(r.all());
    CHECK(r.new_wage_at_old_prices == doctest::Approx(1.0825).epsilon(1e-4));

    // The printed bundle is rounded to six decimals, which is enough to miss
    // the constant-value test by about 5e-7.
    const PropertyReport rounded =
        check_properties(tech, example_change(), eq, values, new_values, b, golden::example_new_bundle());
    CHECK(rounded.more_expensive);
    CHECK_FALSE(rounded.constant_value);
}

TEST_CASE("doubling the bundle breaks constant value") {
    const Technology tech = testing::example_technology();
    const WageBundle b = testing::example_bundle();
    const Equilibrium eq = uniform_profit_rate(tech, b);
    const Vector new_values = labor_values(apply(tech, example_change()));
    const WageBundle doubled(scaled(b.quantities(), 2.0));
    const PropertyReport r =
        check_properties(tech, example_change(), eq, labor_values(tech), new_values, b, doubled);
    CHECK(r.new_wage_at_old_prices == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.more_expensive);
    CHECK(r.new_bundle_value == doctest::Approx(1.0707).epsilon(1e-4));
    CHECK_FALSE(r.constant_value);
    CHECK_FALSE(r.new_bundle_in_b1);
}

TEST_CASE("the example change with the bundle held fixed raises the profit rate") {
    const Technology tech = testing::example_technology();
    const WageBundle b = testing::example_bundle();
    const double before = uniform_profit_rate(tech, b).profit_rate;
    const double after = uniform_profit_rate(apply(tech, example_change()), b).profit_rate;
    CHECK(after == doctest::Approx(0.1811024).epsilon(1e-6));
    CHECK(after > before);
}

TEST_CASE("property: viable changes never lower the profit rate at a fixed bundle") {
    testing::Rng rng(424242);
    int viable = 0;
    for (int trial = 0; trial < 3000 && viable < 600; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        const Drawn d = draw_economy(rng, n);
        const Equilibrium eq = uniform_profit_rate(d.tech, d.bundle);
        const std::size_t i = rng.integer(0, n - 1);
        Vector column = d.tech.inputs().column(i);
        for (double& v : column) v *= rng.uniform(0.5, 1.5);
        const TechChange tc(i, column, d.tech.labor()[i] * rng.uniform(0.5, 1.5));
        if (!classify(d.tech, eq, tc).viable) continue;
        Technology changed = d.tech;
        try {
            changed = apply(d.tech, tc);
        } catch (const EconomyError&) {
            continue;
        }
        ++viable;
        CHECK(uniform_profit_rate(changed, d.bundle).profit_rate >= eq.profit_rate - 1e-9);
    }
    CHECK(viable >= 500);
}

TEST_CASE("property: viable CU-LS changes lower no labor value") {
    testing::Rng rng(777);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        const Drawn d = draw_economy(rng, n);
        const Equilibrium eq = uniform_profit_rate(d.tech, d.bundle);
        const std::size_t i = rng.integer(0, n - 1);
        const Vector delta = testing::random_vector(rng, n, 1e-4, 0.02);
        const double ceiling = d.tech.labor()[i] - dot(eq.prices, delta);
        if (ceiling <= 1e-6) continue;
        Vector column = d.tech.inputs().column(i);
        for (std::size_t j = 0; j < n; ++j) column[j] += delta[j];
        const TechChange tc(i, column, rng.uniform(0.0, ceiling));
        const ChangeClassification c = classify(d.tech, eq, tc);
        REQUIRE(c.culs);
        REQUIRE(c.viable);
        Technology changed = d.tech;
        try {
            changed = apply(d.tech, tc);
        } catch (const EconomyError&) {
            continue;
        }
        const Vector before = labor_values(d.tech);
        const Vector after = labor_values(changed);
        for (std::size_t j = 0; j < n; ++j) CHECK(after[j] <= before[j] + 1e-10);
    }
}

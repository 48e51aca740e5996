#include "okishio/golden.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "okishio/equilibrium.hpp"
#include "okishio/synthesis.hpp"

namespace okishio::golden {

namespace {

Matrix example_inputs() {
    return Matrix{{0.35, 0.05, 0.25}, {0.15, 0.45, 0.05}, {0.15, 0.15, 0.35}};
}

}  // namespace

Technology example_technology() {
    return Technology(example_inputs(), {0.2, 0.15, 0.25});
}

WageBundle example_bundle() {
    return WageBundle({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
}

TechChange example_change() {
    return TechChange(2, {0.27, 0.07, 0.37}, 0.18);
}

WageBundle example_new_bundle() {
    return WageBundle({0.008613, 1.170977, 0.008613});
}

double FixtureCheck::max_error() const {
    if (expected.size() != actual.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const double err = std::abs(expected[i] - actual[i]);
        worst = std::isnan(err) ? std::numeric_limits<double>::infinity() : std::max(worst, err);
    }
    return worst;
}

bool GoldenReport::all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.ok(); });
}

GoldenReport reproduce_example(bool perturb) {
    const auto start = std::chrono::steady_clock::now();
    GoldenReport report;
    auto& checks = report.checks;

    Matrix inputs = example_inputs();
    if (perturb) inputs(0, 0) += 0.02;
    const Technology tech(std::move(inputs), {0.2, 0.15, 0.25});
    const WageBundle b = example_bundle();
    const TechChange tc = example_change();

    const Equilibrium eq = uniform_profit_rate(tech, b);
    const Vector values = labor_values(tech);
    const double vb = value_of_bundle(values, b);
    const AssumptionBReport pre_b = assess_assumption_b(eq.prices, values, b);

    checks.push_back({"pi", {0.1764706}, {eq.profit_rate}});
    checks.push_back({"p", {1.0, 0.9090909, 1.090909}, eq.prices});
    checks.push_back({"Lambda", {0.5714286, 0.5, 0.6428571}, values});
    checks.push_back({"Lambda.b", {0.5714286}, {vb}});
    checks.push_back({"1/Lambda.b", {1.75}, {1.0 / vb}});
    checks.push_back({"max p/Lambda", {1.8181818}, {pre_b.max_ratio}});

    const Technology next = apply(tech, tc);
    const Vector new_values = labor_values(next);
    const ChangeClassification cls = classify(tech, eq, tc);
    checks.push_back({"Lambda_bar", {0.5511364, 0.4797078, 0.5752165}, new_values});
    checks.push_back({"sector 3 cost (old, new)", {0.9272727, 0.9172727}, {cls.old_cost, cls.new_cost}});
    checks.push_back({"alpha", {1.0555556}, {cls.alpha}});

    const WageRegion region = build_region(eq, new_values, vb, cls);
    checks.push_back({"P intercepts", {1.0555556, 1.1611111, 0.9675926}, region.x_intercepts});
    checks.push_back({"V intercepts", {1.0368189, 1.1912014, 0.9934149}, region.y_intercepts});

    SamplingStrategy published_draw;
    published_draw.kind = SamplingKind::EqualSplit;
    published_draw.pivot = 1;
    published_draw.pivot_value = kExamplePivotDraw;
    try {
        const WageBundle sampled = sample_constant_exploitation(region, 1000, published_draw);
        checks.push_back({"b_bar from pivot draw", {0.008613, 1.170977, 0.008613}, sampled.quantities()});
    } catch (const std::exception&) {
        checks.push_back({"b_bar from pivot draw", {0.008613, 1.170977, 0.008613}, {}});
    }

    const WageBundle b_bar = example_new_bundle();
    const Equilibrium post = uniform_profit_rate(next, b_bar);
    const AssumptionBReport post_b = assess_assumption_b(post.prices, new_values, b_bar);
    checks.push_back({"Lambda_bar.b_bar", {0.5714286}, {value_of_bundle(new_values, b_bar)}});
    checks.push_back({"pi_bar", {0.1604551}, {post.profit_rate}});
    checks.push_back({"p_bar", {0.9288424, 0.8398318, 0.9956171}, post.prices});
    checks.push_back({"max p_bar/Lambda_bar", {1.750715}, {post_b.max_ratio}});

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace okishio::golden

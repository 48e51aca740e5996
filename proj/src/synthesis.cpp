#include "okishio/synthesis.hpp"

#include <cmath>
#include <string>

#include "okishio/error.hpp"
#include "okishio/random.hpp"

namespace okishio {

std::size_t WageRegion::best_pivot() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < sectors(); ++k)
        if (y_intercepts[k] / x_intercepts[k] > y_intercepts[best] / x_intercepts[best]) best = k;
    return best;
}

bool condition_11_holds(const Vector& prices, const Vector& new_values, double exploitation, double g) {
    const double bound = (1.0 + exploitation) * (1.0 + g);
    for (std::size_t j = 0; j < prices.size(); ++j)
        if (prices[j] / new_values[j] > bound) return true;
    return false;
}

WageRegion build_region(const Equilibrium& pre, const Vector& new_values, double bundle_value,
                        const ChangeClassification& cls) {
    if (!cls.viable) throw EconomyError(ErrorKind::Infeasible, "technical change is not viable at current prices");
    if (new_values.size() != pre.prices.size())
        throw EconomyError(ErrorKind::DimensionMismatch, "post-change values differ in length from prices");

    WageRegion r;
    r.alpha = cls.alpha;
    r.beta = bundle_value;
    r.prices = pre.prices;
    r.new_values = new_values;
    r.exploitation = exploitation_rate(bundle_value);
    r.g = cls.g;
    const std::size_t n = r.prices.size();
    r.x_intercepts.resize(n);
    r.y_intercepts.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        r.x_intercepts[j] = r.alpha / r.prices[j];
        r.y_intercepts[j] = r.beta / r.new_values[j];
        r.feasible = r.feasible || r.y_intercepts[j] > r.x_intercepts[j];
    }
    return r;
}

WageRegion region_for_change(const Technology& tech, const WageBundle& bundle, const TechChange& tc) {
    const Equilibrium eq = uniform_profit_rate(tech, bundle);
    const Vector values = labor_values(tech);
    const Vector new_values = labor_values(apply(tech, tc));
    return build_region(eq, new_values, value_of_bundle(values, bundle), classify(tech, eq, tc));
}

RegionMembership membership(const WageRegion& region, const Vector& bundle) {
    RegionMembership m;
    const double cost = dot(region.prices, bundle);
    const double value = dot(region.new_values, bundle);
    m.on_v = std::abs(value - region.beta) <= kOnHyperplaneTolerance;
    m.below_v = value < region.beta - kStrictMargin;
    m.above_p = cost > region.alpha + kStrictMargin;
    m.nonnegative = true;
    bool any_positive = false;
    for (double v : bundle) {
        m.nonnegative = m.nonnegative && v >= 0.0;
        any_positive = any_positive || v > 0.0;
    }
    m.nonnegative = m.nonnegative && any_positive;
    return m;
}

namespace {

std::size_t choose_pivot(const WageRegion& region, const SamplingStrategy& strategy) {
    if (!region.feasible) throw EconomyError(ErrorKind::Infeasible, "V lies nowhere above P in the positive orthant");
    const std::size_t k = strategy.pivot.value_or(region.best_pivot());
    if (k >= region.sectors()) throw EconomyError(ErrorKind::InvalidSector, "sampling pivot out of range");
    if (!(region.y_intercepts[k] > region.x_intercepts[k])) {
        throw EconomyError(ErrorKind::Infeasible, "pivot sector " + std::to_string(k + 1) +
                                                      " has its V intercept below its P intercept");
    }
    return k;
}

Vector residual_weights(const WageRegion& region, const SamplingStrategy& strategy, std::size_t pivot) {
    const std::size_t n = region.sectors();
    Vector w(n, 1.0);
    if (strategy.kind == SamplingKind::Proportional && strategy.weights.size() == n) {
        double weighted_value = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != pivot) weighted_value += region.new_values[j] * strategy.weights[j];
        if (weighted_value > 0.0) w = strategy.weights;
    }
    w[pivot] = 0.0;
    return w;
}

Vector propose_on_v(const WageRegion& region, std::size_t pivot, double pivot_value, const Vector& weights) {
    const std::size_t n = region.sectors();
    Vector b(n, 0.0);
    b[pivot] = pivot_value;
    const double residual = region.beta - region.new_values[pivot] * pivot_value;
    double weighted_value = 0.0;
    for (std::size_t j = 0; j < n; ++j) weighted_value += region.new_values[j] * weights[j];
    if (weighted_value > 0.0 && residual > 0.0)
        for (std::size_t j = 0; j < n; ++j)
            if (j != pivot) b[j] = residual * weights[j] / weighted_value;

    // Snap onto V exactly (up to rounding).
    const double s = region.beta / dot(region.new_values, b);
    for (double& v : b) v *= s;
    return b;
}

}  // namespace

WageBundle sample_constant_exploitation(const WageRegion& region, std::uint64_t seed,
                                        const SamplingStrategy& strategy) {
    const std::size_t k = choose_pivot(region, strategy);
    const Vector weights = residual_weights(region, strategy, k);
    Rng rng(seed);

    for (int attempt = 0; attempt < kMaxProposals; ++attempt) {
        const double draw =
            strategy.pivot_value.value_or(rng.uniform(region.x_intercepts[k], region.y_intercepts[k]));
        Vector b = propose_on_v(region, k, draw, weights);
        if (membership(region, b).constant_exploitation()) return WageBundle(std::move(b));
        if (strategy.pivot_value) {
            throw EconomyError(ErrorKind::Infeasible, "fixed pivot quantity does not give a bundle on V above P");
        }
    }
    throw EconomyError(ErrorKind::SamplingExhausted,
                       std::to_string(kMaxProposals) + " proposals failed the on-V / above-P test");
}

WageBundle sample_rising_exploitation(const WageRegion& region, std::uint64_t seed,
                                      const SamplingStrategy& strategy) {
    const Vector on_v = sample_constant_exploitation(region, seed, strategy).quantities();
    const double lowest = region.alpha / dot(region.prices, on_v);
    Rng rng(splitmix64(seed));

    for (int attempt = 0; attempt < kMaxProposals; ++attempt) {
        const double s = lowest + (1.0 - lowest) * rng.uniform(0.25, 0.75);
        Vector b = scaled(on_v, s);
        if (membership(region, b).rising_exploitation()) return WageBundle(std::move(b));
    }
    throw EconomyError(ErrorKind::SamplingExhausted,
                       std::to_string(kMaxProposals) + " proposals failed the below-V / above-P test");
}

SynthesizedChange synthesize_culs_change(const Technology& tech, const WageBundle& bundle, const Equilibrium& eq,
                                         std::size_t sector, double epsilon_frac, double labor_frac) {
    const auto in_unit = [](double f) { return std::isfinite(f) && f > 0.0 && f < 1.0; };
    if (!in_unit(epsilon_frac) || !in_unit(labor_frac))
        throw EconomyError(ErrorKind::InvalidFraction, "epsilon and labor fractions must lie in (0, 1)");
    if (sector >= tech.sectors()) {
        throw EconomyError(ErrorKind::InvalidSector, "sector " + std::to_string(sector + 1) + " out of range 1.." +
                                                         std::to_string(tech.sectors()));
    }

    const Vector values = labor_values(tech);
    const AssumptionBReport b_report = assess_assumption_b(eq.prices, values, bundle);
    if (!b_report.in_b()) {
        throw EconomyError(ErrorKind::NotInB, "wage bundle is not admissible: 1/(value of b) = " +
                                                  std::to_string(1.0 / b_report.bundle_value) +
                                                  " is not below max p/lambda = " + std::to_string(b_report.max_ratio));
    }

    const std::size_t j = b_report.argmax;
    const double phi = b_report.bundle_value * eq.prices[j] / values[j];
    if (!(phi > 1.0)) throw EconomyError(ErrorKind::NotInB, "phi <= 1 leaves an empty labor interval");

    const double price_sum = sum(eq.prices);
    const double old_labor = tech.labor()[sector];
    const double epsilon = epsilon_frac * old_labor / price_sum;
    const double upper = old_labor - epsilon * price_sum;
    const double lower = upper / phi;
    const double new_labor = lower + labor_frac * (upper - lower);

    Vector column = tech.inputs().column(sector);
    for (double& a : column) a += epsilon;

    return SynthesizedChange{TechChange(sector, std::move(column), new_labor), j, phi, epsilon, {lower, upper}};
}

}  // namespace okishio

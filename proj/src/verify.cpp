#include "okishio/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "okishio/error.hpp"
#include "okishio/perron.hpp"

namespace okishio {

namespace {

constexpr double kProfitMargin = 1e-12;
constexpr double kOkishioMargin = 1e-9;
constexpr double kValueFallMargin = 1e-10;
constexpr double kResidualLimit = 1e-9;
constexpr double kOracleAgreement = 1e-8;
constexpr std::size_t kOracleMaxSectors = 6;

ScenarioSide solve_side(const Technology& tech, const WageBundle& bundle) {
    ScenarioSide side;
    side.equilibrium = uniform_profit_rate(tech, bundle);
    side.values = value_system(tech, bundle);
    side.admissibility = assess_assumption_b(side.equilibrium.prices, side.values.values, bundle);
    return side;
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::ProfitFellExploitationConstant: return "ProfitFellExploitationConstant";
        case Verdict::ProfitFellExploitationRose: return "ProfitFellExploitationRose";
        case Verdict::OkishioRise: return "OkishioRise";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

Verdict assign_verdict(double pi, double pi_bar, double e, double e_bar) {
    if (pi_bar < pi - kProfitMargin) {
        if (std::abs(e_bar - e) <= kEqualityTolerance) return Verdict::ProfitFellExploitationConstant;
        if (e_bar > e + kStrictMargin) return Verdict::ProfitFellExploitationRose;
        return Verdict::Inconclusive;
    }
    if (pi_bar > pi + kProfitMargin) return Verdict::OkishioRise;
    return Verdict::Inconclusive;
}

bool ScenarioReport::value_price_chain() const {
    const Vector& p = pre.equilibrium.prices;
    const Vector& lambda = pre.values.values;
    const Vector& lambda_bar = post.values.values;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (!(p[j] > lambda[j])) return false;
        if (lambda_bar[j] > lambda[j] + kValueFallMargin) return false;
    }
    return true;
}

ScenarioReport run_scenario(const Technology& tech, const WageBundle& bundle, const TechChange& tc,
                            const WageBundle& new_bundle) {
    try {
        ScenarioReport r;
        r.pre = solve_side(tech, bundle);
        const Technology next = apply(tech, tc);
        r.post = solve_side(next, new_bundle);
        r.change = classify(tech, r.pre.equilibrium, tc);

        const PropertyReport props = check_properties(tech, tc, r.pre.equilibrium, r.pre.values.values,
                                                      r.post.values.values, bundle, new_bundle);
        r.flags.viable = r.change.viable;
        r.flags.culs = r.change.culs;
        r.flags.p1 = props.more_expensive;
        r.flags.p2 = props.constant_value;
        r.flags.p3 = props.bounded_reduction;
        r.flags.in_b_pre = r.pre.admissibility.in_b();
        r.flags.in_b1_post = r.post.admissibility.in_b1;
        if (r.change.viable) {
            r.region = build_region(r.pre.equilibrium, r.post.values.values, r.pre.values.bundle_value, r.change);
            r.flags.region_feasible = r.region.feasible;
            r.flags.condition_11 = condition_11_holds(r.pre.equilibrium.prices, r.post.values.values,
                                                      r.pre.values.exploitation, r.change.g);
        }
        r.verdict = assign_verdict(r.pre.equilibrium.profit_rate, r.post.equilibrium.profit_rate,
                                   r.pre.values.exploitation, r.post.values.exploitation);
        return r;
    } catch (const EconomyError& err) {
        throw EconomyError(err.kind(), std::string("scenario: ") + err.what());
    }
}

double oracle_spectral_radius(const Matrix& m) {
    const std::size_t n = m.rows();
    if (!m.square() || n == 0) throw EconomyError(ErrorKind::DimensionMismatch, "oracle needs a square matrix");
    if (n > kOracleMaxSectors)
        throw EconomyError(ErrorKind::OracleLimit, "oracle spectral radius limited to n <= 6, got " + std::to_string(n));

    // mu I - M has only positive elimination pivots iff mu > rho(M).
    const auto series_converges = [&](double mu) {
        std::vector<long double> b(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                b[r * n + c] = (r == c ? static_cast<long double>(mu) : 0.0L) - static_cast<long double>(m(r, c));
        for (std::size_t k = 0; k < n; ++k) {
            const long double pivot = b[k * n + k];
            if (!(pivot > 0.0L)) return false;
            for (std::size_t r = k + 1; r < n; ++r) {
                const long double f = b[r * n + k] / pivot;
                for (std::size_t c = k; c < n; ++c) b[r * n + c] -= f * b[k * n + c];
            }
        }
        return true;
    };

    double lo = 0.0;
    double hi = norm_inf(m);
    if (hi == 0.0) return 0.0;
    for (int step = 0; step < 200 && hi - lo > 0.0; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (series_converges(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

OracleMembership oracle_region_membership(const Vector& bundle, const WageRegion& region) {
    OracleMembership o;
    if (bundle.size() != region.prices.size() || bundle.size() != region.new_values.size())
        throw EconomyError(ErrorKind::DimensionMismatch, "bundle and region differ in dimension");

    long double cost = 0.0L;
    long double value = 0.0L;
    bool any_positive = false;
    o.nonnegative = true;
    for (std::size_t j = 0; j < bundle.size(); ++j) {
        cost += static_cast<long double>(region.prices[j]) * bundle[j];
        value += static_cast<long double>(region.new_values[j]) * bundle[j];
        o.nonnegative = o.nonnegative && bundle[j] >= 0.0;
        any_positive = any_positive || bundle[j] > 0.0;
    }
    // The zero bundle is rejected.
    o.nonnegative = o.nonnegative && any_positive;
    o.on_v = std::fabs(value - static_cast<long double>(region.beta)) <= 1e-10L;
    o.above_p = cost > static_cast<long double>(region.alpha) + 1e-12L;
    return o;
}

RandomEconomy random_economy(Rng& rng, std::size_t n_min, std::size_t n_max) {
    if (n_min < 1 || n_max < n_min) throw EconomyError(ErrorKind::InvalidInput, "invalid sector range");
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        const std::size_t n = rng.integer(n_min, n_max);
        Matrix a(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.uniform(0.0, 0.3);

        if (!is_strongly_connected(a)) {
            std::vector<std::size_t> cycle(n);
            std::iota(cycle.begin(), cycle.end(), std::size_t{0});
            for (std::size_t k = n; k > 1; --k) std::swap(cycle[k - 1], cycle[rng.integer(0, k - 1)]);
            for (std::size_t k = 0; k < n; ++k) a(cycle[k], cycle[(k + 1) % n]) += 1e-3;
        }
        const double rho = spectral_radius(a);
        if (!(rho > 0.0)) continue;
        const double target = rng.uniform(0.3, 0.8);
        a = (target / rho) * a;

        Vector labor(n);
        for (double& l : labor) l = rng.uniform(0.05, 0.5);
        Vector b(n);
        for (double& q : b) q = rng.uniform(0.0, 1.0);

        Technology tech(std::move(a), std::move(labor));
        const Vector values = labor_values(tech);
        const double target_value = rng.uniform(0.3, 0.9);
        b = scaled(b, target_value / dot(values, b));
        WageBundle bundle(std::move(b));
        if (check_assumption_B(tech, bundle).in_b()) return RandomEconomy{std::move(tech), std::move(bundle)};
    }
    throw EconomyError(ErrorKind::SamplingExhausted, "no admissible random economy after 10000 draws");
}

bool SuiteRow::violation() const {
    if (!error.empty()) return true;
    if (!synthesized_ok || !feasibility_agrees || !flags.region_feasible) return true;
    if (verdict != Verdict::ProfitFellExploitationConstant) return true;
    if (!(pi_bar < pi - kProfitMargin) || !(std::abs(e_bar - e) <= kEqualityTolerance)) return true;
    if (rising_verdict != Verdict::ProfitFellExploitationRose) return true;
    if (!(okishio_pi_bar >= pi - kOkishioMargin)) return true;
    if (!chain_ok) return true;
    if (!(max_residual <= kResidualLimit)) return true;
    if (oracle_checked && !(oracle_gap <= kOracleAgreement)) return true;
    return false;
}

SuiteRow run_suite_scenario(std::uint64_t scenario_seed, std::size_t n_min, std::size_t n_max) {
    SuiteRow row;
    row.seed = scenario_seed;
    try {
        Rng rng(scenario_seed);
        const RandomEconomy economy = random_economy(rng, n_min, n_max);
        const Technology& tech = economy.tech;
        const WageBundle& b = economy.bundle;
        row.n = tech.sectors();
        row.sector = rng.integer(0, row.n - 1);
        const double epsilon_frac = rng.uniform(0.05, 0.95);
        const double labor_frac = rng.uniform(0.05, 0.95);

        const Equilibrium eq = uniform_profit_rate(tech, b);
        const SynthesizedChange synth = synthesize_culs_change(tech, b, eq, row.sector, epsilon_frac, labor_frac);
        const WageRegion region = region_for_change(tech, b, synth.change);

        SamplingStrategy strategy;
        strategy.weights = b.quantities();
        const WageBundle constant = sample_constant_exploitation(region, scenario_seed, strategy);
        const ScenarioReport report = run_scenario(tech, b, synth.change, constant);

        row.flags = report.flags;
        row.pi = report.pre.equilibrium.profit_rate;
        row.pi_bar = report.post.equilibrium.profit_rate;
        row.e = report.pre.values.exploitation;
        row.e_bar = report.post.values.exploitation;
        row.verdict = report.verdict;
        row.synthesized_ok = report.flags.viable && report.flags.culs && report.flags.condition_11;
        row.feasibility_agrees = report.flags.condition_11 == report.flags.region_feasible;
        row.chain_ok = report.value_price_chain();

        const WageBundle rising = sample_rising_exploitation(region, scenario_seed, strategy);
        const ScenarioReport rising_report = run_scenario(tech, b, synth.change, rising);
        row.rising_verdict = rising_report.verdict;
        row.rising_pi_bar = rising_report.post.equilibrium.profit_rate;
        row.rising_e_bar = rising_report.post.values.exploitation;

        const ScenarioReport okishio = run_scenario(tech, b, synth.change, b);
        row.okishio_pi_bar = okishio.post.equilibrium.profit_rate;

        row.max_residual = std::max({report.pre.equilibrium.residual, report.post.equilibrium.residual,
                                     rising_report.post.equilibrium.residual, okishio.post.equilibrium.residual});

        if (row.n <= kOracleMaxSectors) {
            row.oracle_checked = true;
            const Technology next = apply(tech, synth.change);
            const std::pair<Matrix, double> checks[] = {
                {augmented_matrix(tech, b), report.pre.equilibrium.rho},
                {augmented_matrix(next, constant), report.post.equilibrium.rho},
                {augmented_matrix(next, rising), rising_report.post.equilibrium.rho},
                {augmented_matrix(next, b), okishio.post.equilibrium.rho},
            };
            for (const auto& [m, rho] : checks)
                row.oracle_gap = std::max(row.oracle_gap, std::abs(oracle_spectral_radius(m) - rho));
        }
    } catch (const std::exception& err) {
        row.error = err.what();
    }
    return row;
}

std::vector<SuiteRow> run_suite(const SuiteOptions& options) {
    std::vector<SuiteRow> rows(options.count);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t k = next++; k < options.count; k = next++)
            rows[k] = run_suite_scenario(splitmix64(options.seed + k), options.n_min, options.n_max);
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return rows;
}

SuiteSummary summarize(const std::vector<SuiteRow>& rows) {
    SuiteSummary s;
    s.scenarios = rows.size();
    for (const SuiteRow& row : rows) {
        if (row.flags.region_feasible) ++s.feasible;
        if (row.violation()) ++s.violations;
        ++s.verdicts[std::string(to_string(row.verdict))];
        ++s.rising_verdicts[std::string(to_string(row.rising_verdict))];
    }
    return s;
}

}  // namespace okishio

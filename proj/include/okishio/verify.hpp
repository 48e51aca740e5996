#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "okishio/dense.hpp"
#include "okishio/equilibrium.hpp"
#include "okishio/linear_economy.hpp"
#include "okishio/random.hpp"
#include "okishio/synthesis.hpp"
#include "okishio/technical_change.hpp"

namespace okishio {

enum class Verdict {
    ProfitFellExploitationConstant,
    ProfitFellExploitationRose,
    OkishioRise,
    Inconclusive,
};

std::string_view to_string(Verdict v);

/// Observed outcome only; sufficient conditions are reported separately as flags.
Verdict assign_verdict(double pi, double pi_bar, double e, double e_bar);

struct ScenarioSide {
    Equilibrium equilibrium;
    ValueSystem values;
    AssumptionBReport admissibility;
};

struct ScenarioFlags {
    bool viable = false;
    bool culs = false;
    bool p1 = false;
    bool p2 = false;
    bool p3 = false;
    bool in_b_pre = false;
    bool in_b1_post = false;
    bool condition_11 = false;
    bool region_feasible = false;
};

struct ScenarioReport {
    ScenarioSide pre;
    ScenarioSide post;
    ChangeClassification change;
    ScenarioFlags flags;
    WageRegion region;  ///< empty when the change is not viable
    Verdict verdict = Verdict::Inconclusive;

    /// p >> Lambda and Lambdabar <= Lambda + 1e-10, elementwise.
    bool value_price_chain() const;
};

/// Full before/after analysis recomputed from raw inputs. Module errors are
/// rethrown with "scenario:" context.
ScenarioReport run_scenario(const Technology& tech, const WageBundle& bundle, const TechChange& tc,
                            const WageBundle& new_bundle);

/// Perron root by bisection on mu: mu > rho(M) exactly when the Neumann series
/// of M / mu converges, which for a nonnegative M is the case exactly when
/// mu I - M is a nonsingular M-matrix (all elimination pivots positive).
/// Throws OracleLimit for n > 6.
double oracle_spectral_radius(const Matrix& m);

struct OracleMembership {
    bool on_v = false;
    bool above_p = false;
    bool nonnegative = false;
    bool accepted() const { return on_v && above_p && nonnegative; }
};

/// Membership recomputed from raw inner products, in long double.
OracleMembership oracle_region_membership(const Vector& bundle, const WageRegion& region);

struct RandomEconomy {
    Technology tech;
    WageBundle bundle;
};

/// Draws an admissible economy: A entries U(0, 0.3) rescaled to rho(A) in
/// [0.3, 0.8], L in U(0.05, 0.5), b scaled so that its value is in (0.3, 0.9),
/// redrawn until b is admissible.
RandomEconomy random_economy(Rng& rng, std::size_t n_min, std::size_t n_max);

struct SuiteOptions {
    std::uint64_t seed = 1000;
    std::size_t count = 500;
    std::size_t n_min = 2;
    std::size_t n_max = 8;
    unsigned threads = 1;
};

/// One Monte Carlo scenario: synthesized change plus sampled bundles.
struct SuiteRow {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t sector = 0;
    ScenarioFlags flags;
    double pi = 0.0;
    double pi_bar = 0.0;
    double e = 0.0;
    double e_bar = 0.0;
    Verdict verdict = Verdict::Inconclusive;

    bool synthesized_ok = false;        ///< viable, CU-LS, price-value ratio condition
    bool feasibility_agrees = false;    ///< intercept test == ratio condition
    Verdict rising_verdict = Verdict::Inconclusive;
    double rising_pi_bar = 0.0;
    double rising_e_bar = 0.0;
    double okishio_pi_bar = 0.0;        ///< post-change profit rate with b held fixed
    bool chain_ok = false;
    double max_residual = 0.0;          ///< worst eigen residual over the solved equilibria
    double oracle_gap = 0.0;            ///< worst |oracle rho - power-iteration rho|, n <= 6
    bool oracle_checked = false;
    std::string error;                  ///< non-empty if the pipeline threw

    /// Pipeline guarantees: any failure indicates a bug.
    bool violation() const;
};

struct SuiteSummary {
    std::size_t scenarios = 0;
    std::size_t feasible = 0;
    std::size_t violations = 0;
    std::map<std::string, std::size_t> verdicts;
    std::map<std::string, std::size_t> rising_verdicts;
};

SuiteRow run_suite_scenario(std::uint64_t scenario_seed, std::size_t n_min, std::size_t n_max);

/// Scenario k uses seed splitmix64(options.seed + k); rows come back in k order
/// regardless of the thread count.
std::vector<SuiteRow> run_suite(const SuiteOptions& options);

SuiteSummary summarize(const std::vector<SuiteRow>& rows);

}  // namespace okishio

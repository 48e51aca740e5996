// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "okishio/golden.hpp"
#include "okishio/verify.hpp"

using namespace okishio;

namespace {

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
    if (!pass) ++failures;
}

std::string format(const char* fmt, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    {
        const auto start = std::chrono::steady_clock::now();
        const golden::GoldenReport g = golden::reproduce_example();
        const double elapsed = seconds_since(start);
        double worst = 0.0;
        std::string worst_name;
        for (const auto& c : g.checks) {
            if (c.max_error() >= worst) {
                worst = c.max_error();
                worst_name = c.name;
            }
        }
        report(1, "golden replay", g.all_ok() && elapsed < 1.0,
               format("%zu fixtures, max abs error %.3g (%s), tolerance %.0e, %.4f s", g.checks.size(), worst,
                      worst_name.c_str(), golden::kGoldenTolerance, elapsed));
    }

    SuiteOptions opts;
    opts.seed = 1000;
    opts.count = 500;
    opts.n_min = 2;
    opts.n_max = 8;
    opts.threads = std::max(1u, std::thread::hardware_concurrency());
    const auto start = std::chrono::steady_clock::now();
    const std::vector<SuiteRow> rows = run_suite(opts);
    const double elapsed = seconds_since(start);

    std::size_t errors = 0, feasible = 0;
    std::size_t c2 = 0, c3 = 0, c4 = 0, c5 = 0, c6 = 0, oracle_checked = 0;
    double worst_residual = 0.0, worst_gap = 0.0, worst_e_drift = 0.0;
    double smallest_okishio_change = std::numeric_limits<double>::infinity();
    for (const SuiteRow& r : rows) {
        if (!r.error.empty()) {
            ++errors;
            std::fprintf(stderr, "scenario %llu: %s\n", static_cast<unsigned long long>(r.seed), r.error.c_str());
            continue;
        }
        if (r.flags.region_feasible) {
            ++feasible;
            worst_e_drift = std::max(worst_e_drift, std::abs(r.e_bar - r.e));
            if (r.pi_bar < r.pi - 1e-12 && std::abs(r.e_bar - r.e) <= 1e-9) ++c2;
            if (r.rising_e_bar > r.e + 1e-12 && r.rising_pi_bar < r.pi - 1e-12) ++c5;
        }
        if (r.synthesized_ok && r.flags.viable && r.flags.culs && r.flags.condition_11 && r.feasibility_agrees) ++c3;
        smallest_okishio_change = std::min(smallest_okishio_change, r.okishio_pi_bar - r.pi);
        if (r.okishio_pi_bar >= r.pi - 1e-9) ++c4;
        worst_residual = std::max(worst_residual, r.max_residual);
        if (r.oracle_checked) {
            ++oracle_checked;
            worst_gap = std::max(worst_gap, r.oracle_gap);
        }
        const bool oracle_ok = !r.oracle_checked || r.oracle_gap <= 1e-8;
        if (!r.flags.culs || (r.chain_ok && r.max_residual <= 1e-9 && oracle_ok)) ++c6;
    }
    const std::size_t n = rows.size();
    const bool clean = errors == 0 && n >= 500;

    report(2, "constant exploitation, falling profit rate", clean && c2 == feasible && feasible > 0 && elapsed < 60.0,
           format("%zu/%zu feasible scenarios, max |e_bar - e| %.3g, %zu errors, %.2f s on %u threads", c2, feasible,
                  worst_e_drift, errors, elapsed, opts.threads));
    report(3, "synthesized change guarantees", clean && c3 == n,
           format("%zu/%zu viable, CU-LS, price-value ratio condition holding and agreeing with the intercept test", c3, n));
    report(4, "fixed bundle control", clean && c4 == n,
           format("%zu/%zu with pi_bar >= pi - 1e-9, smallest pi_bar - pi %.3g", c4, n, smallest_okishio_change));
    report(5, "rising exploitation, falling profit rate", clean && c5 == feasible && feasible > 0,
           format("%zu/%zu feasible scenarios", c5, feasible));
    report(6, "value/price chain and solver agreement", clean && c6 == n,
           format("%zu/%zu; max residual %.3g; oracle checked on %zu (n <= 6), max gap %.3g", c6, n, worst_residual,
                  oracle_checked, worst_gap));

    std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria FAILED");
    return failures == 0 ? 0 : 1;
}

#include "okishio/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>

#include "okishio/equilibrium.hpp"
#include "okishio/error.hpp"
#include "okishio/golden.hpp"
#include "okishio/io.hpp"
#include "okishio/linear_economy.hpp"
#include "okishio/synthesis.hpp"
#include "okishio/technical_change.hpp"
#include "okishio/verify.hpp"

namespace okishio::cli {

namespace {

using io::json;

struct RunConfig {
    std::string economy_path;
    std::string tc_path;
    std::string wage_path;
    std::uint64_t seed = 1000;
    std::size_t sector = 0;  // 1-based on the command line; 0 = unset
    double epsilon_frac = 0.5;
    double labor_frac = 0.5;
    std::string format = "text";
    std::size_t count = 100;
    std::size_t n_min = 2;
    std::size_t n_max = 8;
    unsigned threads = 1;
    std::string strategy = "proportional";
    std::size_t pivot = 0;  // 1-based; 0 = default pivot
    std::string mode = "constant";
    std::string summary_path;
    bool perturb = false;
};

/// Thrown for a failed internal guarantee (exit 3).
struct GuaranteeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sig7(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.7g", v);
    return buf;
}

std::string sig7(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + sig7(v[i]);
    return s + ")";
}

const char* yes_no(bool b) {
    return b ? "yes" : "no";
}

io::EconomyDocument load_economy(const RunConfig& cfg) {
    return io::parse_economy(io::read_json(cfg.economy_path));
}

WageBundle require_bundle(const io::EconomyDocument& doc) {
    if (!doc.bundle) throw EconomyError(ErrorKind::InvalidInput, "economy file has no wage bundle \"b\"");
    return *doc.bundle;
}

void check_residual(double residual, const char* what) {
    if (!(residual <= residual_tolerance())) {
        throw GuaranteeViolation(std::string(what) + " residual " + sig7(residual) + " exceeds tolerance " +
                                 sig7(residual_tolerance()));
    }
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const auto doc = load_economy(cfg);
    const WageBundle b = require_bundle(doc);
    const Technology& tech = doc.tech;

    const Equilibrium eq = uniform_profit_rate(tech, b);
    const ValueSystem vs = value_system(tech, b);
    const AssumptionBReport admissible = assess_assumption_b(eq.prices, vs.values, b);
    const double value_residual = value_accounting_residual(tech, vs.values);
    check_residual(eq.residual, "eigenvector");
    check_residual(value_residual, "value accounting");

    Vector ratios(tech.sectors());
    for (std::size_t k = 0; k < ratios.size(); ++k) ratios[k] = eq.prices[k] / vs.values[k];

    if (cfg.format == "json") {
        json report{{"equilibrium", io::to_json(eq)},
                    {"values", vs.values},
                    {"bundle_value", vs.bundle_value},
                    {"e", vs.exploitation},
                    {"negative_exploitation", vs.negative_exploitation},
                    {"R", max_profit_rate(tech)},
                    {"rho_A", tech.input_spectral_radius()},
                    {"rho_M", eq.rho},
                    {"assumption_B", io::to_json(admissible)},
                    {"price_value_ratios", ratios},
                    {"value_residual", value_residual}};
        out << report.dump(2) << '\n';
        return kSuccess;
    }

    out << "sectors            " << tech.sectors() << '\n'
        << "rho(A)             " << sig7(tech.input_spectral_radius()) << '\n'
        << "max profit rate R  " << sig7(max_profit_rate(tech)) << '\n'
        << "rho(M)             " << sig7(eq.rho) << '\n'
        << "profit rate pi     " << sig7(eq.profit_rate) << '\n'
        << "prices p           " << sig7(eq.prices) << '\n'
        << "values Lambda      " << sig7(vs.values) << '\n'
        << "value of b         " << sig7(vs.bundle_value) << '\n'
        << "exploitation e     " << sig7(vs.exploitation) << (vs.negative_exploitation ? "  (negative)" : "") << '\n'
        << "p/Lambda           " << sig7(ratios) << '\n'
        << "max p/Lambda       " << sig7(admissible.max_ratio) << " at sector " << admissible.argmax + 1 << '\n'
        << "b in B1            " << yes_no(admissible.in_b1) << '\n'
        << "b in B2            " << yes_no(admissible.in_b2) << '\n'
        << "eigen residual     " << sig7(eq.residual) << '\n';
    return kSuccess;
}

int cmd_check_tc(const RunConfig& cfg, std::ostream& out) {
    const auto doc = load_economy(cfg);
    const WageBundle b = require_bundle(doc);
    const TechChange tc = io::parse_tech_change(io::read_json(cfg.tc_path));
    const Technology& tech = doc.tech;

    const Equilibrium eq = uniform_profit_rate(tech, b);
    const ChangeClassification cls = classify(tech, eq, tc);
    const Vector values = labor_values(tech);
    const Vector new_values = labor_values(apply(tech, tc));

    json report{{"sector", tc.sector() + 1}, {"classification", io::to_json(cls)}, {"new_values", new_values}};
    std::optional<PropertyReport> props;
    if (!cfg.wage_path.empty()) {
        const WageBundle b_bar = io::parse_wage(io::read_json(cfg.wage_path));
        props = check_properties(tech, tc, eq, values, new_values, b, b_bar);
        report["properties"] = io::to_json(*props);
    }
    std::optional<WageRegion> region;
    if (cls.viable) {
        region = build_region(eq, new_values, value_of_bundle(values, b), cls);
        report["region"] = io::to_json(*region);
    }

    if (cfg.format == "json") {
        out << report.dump(2) << '\n';
        return kSuccess;
    }
    out << "sector             " << tc.sector() + 1 << '\n'
        << "viable             " << yes_no(cls.viable) << '\n'
        << "CU-LS              " << yes_no(cls.culs) << '\n'
        << "unit cost          " << sig7(cls.old_cost) << " -> " << sig7(cls.new_cost) << '\n'
        << "cost drop          " << sig7(cls.cost_drop) << '\n'
        << "g                  " << sig7(cls.g) << '\n'
        << "alpha              " << sig7(cls.alpha) << '\n'
        << "new values         " << sig7(new_values) << '\n';
    if (region) {
        out << "P intercepts       " << sig7(region->x_intercepts) << '\n'
            << "V intercepts       " << sig7(region->y_intercepts) << '\n'
            << "region feasible    " << yes_no(region->feasible) << '\n';
    }
    if (props) {
        out << "P1 more expensive  " << yes_no(props->more_expensive) << '\n'
            << "P2 constant value  " << yes_no(props->constant_value) << '\n'
            << "P3 bounded drop    " << yes_no(props->bounded_reduction) << '\n'
            << "b_bar in B1        " << yes_no(props->new_bundle_in_b1) << '\n';
    }
    return kSuccess;
}

int cmd_synth_tc(const RunConfig& cfg, std::ostream& out) {
    const auto doc = load_economy(cfg);
    const WageBundle b = require_bundle(doc);
    if (cfg.sector == 0) throw EconomyError(ErrorKind::InvalidSector, "--sector is required (1-based)");
    const Technology& tech = doc.tech;
    const Equilibrium eq = uniform_profit_rate(tech, b);
    const SynthesizedChange synth =
        synthesize_culs_change(tech, b, eq, cfg.sector - 1, cfg.epsilon_frac, cfg.labor_frac);

    const ChangeClassification cls = classify(tech, eq, synth.change);
    const WageRegion region = region_for_change(tech, b, synth.change);
    if (!cls.viable || !cls.culs || !region.feasible)
        throw GuaranteeViolation("synthesized change is not viable, CU-LS and feasible");

    if (cfg.format == "json") {
        json report = io::to_json(synth);
        report["classification"] = io::to_json(cls);
        report["region"] = io::to_json(region);
        out << report.dump(2) << '\n';
        return kSuccess;
    }
    out << "sector             " << synth.change.sector() + 1 << '\n'
        << "pivot j*           " << synth.pivot + 1 << '\n'
        << "phi                " << sig7(synth.phi) << '\n'
        << "epsilon            " << sig7(synth.epsilon) << '\n'
        << "labor interval     (" << sig7(synth.labor_interval.first) << ", " << sig7(synth.labor_interval.second)
        << ")\n"
        << "new labor          " << sig7(synth.change.new_labor()) << '\n'
        << "new column         " << sig7(synth.change.new_column()) << '\n'
        << "viable / CU-LS     " << yes_no(cls.viable) << " / " << yes_no(cls.culs) << '\n'
        << "region feasible    " << yes_no(region.feasible) << '\n';
    return kSuccess;
}

int cmd_synth_wage(const RunConfig& cfg, std::ostream& out) {
    const auto doc = load_economy(cfg);
    const WageBundle b = require_bundle(doc);
    const TechChange tc = io::parse_tech_change(io::read_json(cfg.tc_path));
    const WageRegion region = region_for_change(doc.tech, b, tc);

    SamplingStrategy strategy;
    strategy.kind = cfg.strategy == "equal-split" ? SamplingKind::EqualSplit : SamplingKind::Proportional;
    strategy.weights = b.quantities();
    if (cfg.pivot > 0) strategy.pivot = cfg.pivot - 1;

    const WageBundle b_bar = cfg.mode == "rising" ? sample_rising_exploitation(region, cfg.seed, strategy)
                                                  : sample_constant_exploitation(region, cfg.seed, strategy);

    if (cfg.format == "json") {
        json report = io::to_json(b_bar);
        report["region"] = io::to_json(region);
        report["seed"] = cfg.seed;
        report["mode"] = cfg.mode;
        out << report.dump(2) << '\n';
        return kSuccess;
    }
    out << "P intercepts       " << sig7(region.x_intercepts) << '\n'
        << "V intercepts       " << sig7(region.y_intercepts) << '\n'
        << "b_bar              " << sig7(b_bar.quantities()) << '\n'
        << "p.b_bar            " << sig7(dot(region.prices, b_bar.quantities())) << " (alpha " << sig7(region.alpha)
        << ")\n"
        << "Lambda_bar.b_bar   " << sig7(dot(region.new_values, b_bar.quantities())) << " (beta "
        << sig7(region.beta) << ")\n";
    return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto doc = load_economy(cfg);
    const WageBundle b = require_bundle(doc);
    const TechChange tc = io::parse_tech_change(io::read_json(cfg.tc_path));
    const WageBundle b_bar = io::parse_wage(io::read_json(cfg.wage_path));
    const ScenarioReport r = run_scenario(doc.tech, b, tc, b_bar);
    check_residual(r.pre.equilibrium.residual, "pre-change eigenvector");
    check_residual(r.post.equilibrium.residual, "post-change eigenvector");

    if (cfg.format == "json") {
        out << io::to_json(r).dump(2) << '\n';
        return kSuccess;
    }
    const ScenarioFlags& f = r.flags;
    out << "pi -> pi_bar       " << sig7(r.pre.equilibrium.profit_rate) << " -> "
        << sig7(r.post.equilibrium.profit_rate) << '\n'
        << "e -> e_bar         " << sig7(r.pre.values.exploitation) << " -> " << sig7(r.post.values.exploitation)
        << '\n'
        << "p_bar              " << sig7(r.post.equilibrium.prices) << '\n'
        << "Lambda_bar         " << sig7(r.post.values.values) << '\n'
        << "viable / CU-LS     " << yes_no(f.viable) << " / " << yes_no(f.culs) << '\n'
        << "P1 / P2 / P3       " << yes_no(f.p1) << " / " << yes_no(f.p2) << " / " << yes_no(f.p3) << '\n'
        << "b in B (pre)       " << yes_no(f.in_b_pre) << '\n'
        << "b_bar in B1 (post) " << yes_no(f.in_b1_post) << '\n'
        << "ratio condition    " << yes_no(f.condition_11) << '\n'
        << "region feasible    " << yes_no(f.region_feasible) << '\n'
        << "verdict            " << to_string(r.verdict) << '\n';
    return kSuccess;
}

int cmd_reproduce_example(const RunConfig& cfg, std::ostream& out) {
    const golden::GoldenReport report = golden::reproduce_example(cfg.perturb);
    if (cfg.format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name},
                              {"expected", c.expected},
                              {"actual", c.actual},
                              {"max_error", c.max_error()},
                              {"ok", c.ok()}});
        out << json{{"checks", checks}, {"all_ok", report.all_ok()}, {"seconds", report.seconds}}.dump(2) << '\n';
    } else {
        for (const auto& c : report.checks) {
            out << (c.ok() ? "ok        " : "MISMATCH  ") << c.name << ": expected " << sig7(c.expected)
                << ", actual " << sig7(c.actual) << '\n';
        }
        out << (report.all_ok() ? "all fixtures match" : "fixture mismatch") << " (" << report.checks.size()
            << " checks, tolerance " << sig7(golden::kGoldenTolerance) << ")\n";
    }
    return report.all_ok() ? kSuccess : kGoldenMismatch;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw EconomyError(ErrorKind::InvalidInput, "need 1 <= --n-min <= --n-max");
    SuiteOptions options;
    options.seed = cfg.seed;
    options.count = cfg.count;
    options.n_min = cfg.n_min;
    options.n_max = cfg.n_max;
    options.threads = cfg.threads;
    const std::vector<SuiteRow> rows = run_suite(options);
    const SuiteSummary summary = summarize(rows);

    if (cfg.format == "json") {
        out << io::to_json(summary).dump(2) << '\n';
    } else if (cfg.format == "text") {
        out << "scenarios   " << summary.scenarios << '\n'
            << "feasible    " << summary.feasible << '\n'
            << "violations  " << summary.violations << '\n';
        for (const auto& [verdict, n] : summary.verdicts) out << "verdict     " << verdict << ' ' << n << '\n';
    } else {
        out << io::suite_csv_header() << '\n';
        for (const SuiteRow& row : rows) out << io::suite_csv_row(row) << '\n';
    }
    if (!cfg.summary_path.empty()) {
        std::ofstream summary_file(cfg.summary_path);
        if (!summary_file) throw EconomyError(ErrorKind::InvalidInput, "cannot write " + cfg.summary_path);
        summary_file << io::to_json(summary).dump(2) << '\n';
    }
    return summary.violations == 0 ? kSuccess : kGuaranteeViolated;
}

}  // namespace

double residual_tolerance() {
    if (const char* env = std::getenv("OKISHIO_LAB_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return 1e-9;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equilibrium prices, labor values and falling-profit-rate constructions for linear economies",
                 "okishio-lab"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto fraction = CLI::Range(0.0, 1.0);
    const auto add_economy = [&](CLI::App* sub) {
        sub->add_option("--economy", cfg.economy_path, "Economy JSON {A, L, b}")->required()->check(CLI::ExistingFile);
    };
    const auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Equilibrium, values, exploitation and admissibility");
    add_economy(analyze);
    add_format(analyze, {"text", "json"});

    CLI::App* check_tc = app.add_subcommand("check-tc", "Classify a technical change; optionally test a new bundle");
    add_economy(check_tc);
    check_tc->add_option("--tc", cfg.tc_path, "Technical change JSON")->required()->check(CLI::ExistingFile);
    check_tc->add_option("--wage", cfg.wage_path, "New wage bundle JSON {b}")->check(CLI::ExistingFile);
    add_format(check_tc, {"text", "json"});

    CLI::App* synth_tc = app.add_subcommand("synth-tc", "Construct a viable CU-LS change admitting falling profits");
    add_economy(synth_tc);
    synth_tc->add_option("--sector", cfg.sector, "Sector to change (1-based)")->required();
    synth_tc->add_option("--epsilon-frac", cfg.epsilon_frac, "Input increase as a fraction of its bound")
        ->check(fraction);
    synth_tc->add_option("--labor-frac", cfg.labor_frac, "Position of the new labor inside its interval")
        ->check(fraction);
    add_format(synth_tc, {"text", "json"});

    CLI::App* synth_wage = app.add_subcommand("synth-wage", "Sample a new wage bundle for a technical change");
    add_economy(synth_wage);
    synth_wage->add_option("--tc", cfg.tc_path, "Technical change JSON")->required()->check(CLI::ExistingFile);
    synth_wage->add_option("--seed", cfg.seed, "Sampler seed");
    synth_wage->add_option("--strategy", cfg.strategy, "Residual distribution")
        ->check(CLI::IsMember({"proportional", "equal-split"}));
    synth_wage->add_option("--pivot", cfg.pivot, "Pivot sector (1-based; default: largest V/P intercept ratio)");
    synth_wage->add_option("--mode", cfg.mode, "constant: on V above P; rising: below V above P")
        ->check(CLI::IsMember({"constant", "rising"}));
    add_format(synth_wage, {"text", "json"});

    CLI::App* verify = app.add_subcommand("verify", "Before/after analysis of a change and a new bundle");
    add_economy(verify);
    verify->add_option("--tc", cfg.tc_path, "Technical change JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("--wage", cfg.wage_path, "New wage bundle JSON {b}")->required()->check(CLI::ExistingFile);
    add_format(verify, {"text", "json"});

    CLI::App* reproduce = app.add_subcommand("reproduce-example", "Replay the three-sector example against fixtures");
    reproduce->add_flag("--perturb", cfg.perturb, "Perturb A (negative control)")->group("");
    add_format(reproduce, {"text", "json"});

    CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo check of the falling-profit-rate pipelines");
    sweep->add_option("--seed", cfg.seed, "Base seed");
    sweep->add_option("--count", cfg.count, "Number of scenarios");
    sweep->add_option("--n-min", cfg.n_min, "Smallest economy");
    sweep->add_option("--n-max", cfg.n_max, "Largest economy");
    sweep->add_option("--threads", cfg.threads, "Worker threads (output is identical for any value)");
    sweep->add_option("--summary", cfg.summary_path, "Also write the JSON summary to this path");
    sweep->preparse_callback([&](std::size_t) { cfg.format = "csv"; });
    add_format(sweep, {"csv", "json", "text"});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInvalidInput;
    }

    try {
        if (*analyze) return cmd_analyze(cfg, out);
        if (*check_tc) return cmd_check_tc(cfg, out);
        if (*synth_tc) return cmd_synth_tc(cfg, out);
        if (*synth_wage) return cmd_synth_wage(cfg, out);
        if (*verify) return cmd_verify(cfg, out);
        if (*reproduce) return cmd_reproduce_example(cfg, out);
        if (*sweep) return cmd_sweep(cfg, out);
    } catch (const GuaranteeViolation& e) {
        err << "error: " << e.what() << '\n';
        return kGuaranteeViolated;
    } catch (const EconomyError& e) {
        err << "error: " << e.what() << '\n';
        return e.is_input_error() ? kInvalidInput : kGuaranteeViolated;
    }
    return kInvalidInput;
}

}  // namespace okishio::cli

#include "okishio/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "okishio/error.hpp"

namespace okishio::io {

namespace {

Vector number_array(const json& doc, const char* key) {
    if (!doc.contains(key)) throw EconomyError(ErrorKind::InvalidInput, std::string("missing field \"") + key + "\"");
    const json& arr = doc.at(key);
    if (!arr.is_array()) throw EconomyError(ErrorKind::InvalidInput, std::string("\"") + key + "\" must be an array");
    Vector out;
    out.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_number()) throw EconomyError(ErrorKind::InvalidInput, std::string("\"") + key + "\" must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

json matrix_rows(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
}

std::string full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

EconomyDocument parse_economy(const json& doc) {
    if (!doc.is_object()) throw EconomyError(ErrorKind::InvalidInput, "economy document must be a JSON object");
    if (!doc.contains("A") || !doc.at("A").is_array())
        throw EconomyError(ErrorKind::InvalidInput, "missing matrix field \"A\"");
    std::vector<Vector> rows;
    for (const json& row : doc.at("A")) {
        if (!row.is_array()) throw EconomyError(ErrorKind::InvalidInput, "\"A\" must be an array of rows");
        Vector r;
        for (const json& v : row) {
            if (!v.is_number()) throw EconomyError(ErrorKind::InvalidInput, "\"A\" must hold numbers");
            r.push_back(v.get<double>());
        }
        rows.push_back(std::move(r));
    }
    EconomyDocument out{Technology(Matrix::from_rows(rows), number_array(doc, "L")), std::nullopt};
    if (doc.contains("b")) {
        WageBundle b(number_array(doc, "b"));
        if (b.size() != out.tech.sectors())
            throw EconomyError(ErrorKind::DimensionMismatch, "\"b\" length differs from the number of sectors");
        out.bundle = std::move(b);
    }
    return out;
}

json to_json(const Technology& tech, const std::optional<WageBundle>& bundle) {
    json doc{{"A", matrix_rows(tech.inputs())}, {"L", tech.labor()}};
    if (bundle) doc["b"] = bundle->quantities();
    return doc;
}

TechChange parse_tech_change(const json& doc) {
    if (!doc.is_object()) throw EconomyError(ErrorKind::InvalidInput, "technical change must be a JSON object");
    if (!doc.contains("sector") || !doc.at("sector").is_number_integer())
        throw EconomyError(ErrorKind::InvalidInput, "technical change needs an integer \"sector\" (1-based)");
    const auto sector = doc.at("sector").get<long long>();
    if (sector < 1) throw EconomyError(ErrorKind::InvalidSector, "sector must be >= 1");
    if (!doc.contains("labor") || !doc.at("labor").is_number())
        throw EconomyError(ErrorKind::InvalidInput, "technical change needs a numeric \"labor\"");
    return TechChange(static_cast<std::size_t>(sector - 1), number_array(doc, "column"), doc.at("labor").get<double>());
}

json to_json(const TechChange& tc) {
    return json{{"sector", tc.sector() + 1}, {"column", tc.new_column()}, {"labor", tc.new_labor()}};
}

WageBundle parse_wage(const json& doc) {
    if (!doc.is_object()) throw EconomyError(ErrorKind::InvalidInput, "wage document must be a JSON object");
    return WageBundle(number_array(doc, "b"));
}

json to_json(const WageBundle& bundle) {
    return json{{"b", bundle.quantities()}};
}

json to_json(const Equilibrium& eq) {
    return json{{"pi", eq.profit_rate}, {"p", eq.prices}, {"rho", eq.rho}, {"residual", eq.residual}};
}

json to_json(const AssumptionBReport& r) {
    return json{{"in_B1", r.in_b1},
                {"in_B2", r.in_b2},
                {"max_ratio", r.max_ratio},
                {"argmax_sector", r.argmax + 1},
                {"bundle_value", r.bundle_value}};
}

json to_json(const ChangeClassification& c) {
    return json{{"viable", c.viable},     {"culs", c.culs}, {"old_cost", c.old_cost}, {"new_cost", c.new_cost},
                {"cost_drop", c.cost_drop}, {"g", c.g},       {"alpha", c.alpha}};
}

json to_json(const PropertyReport& p) {
    return json{{"P1", p.more_expensive},
                {"P2", p.constant_value},
                {"P3", p.bounded_reduction},
                {"new_bundle_in_B1", p.new_bundle_in_b1},
                {"new_wage_at_old_prices", p.new_wage_at_old_prices},
                {"old_bundle_value", p.old_bundle_value},
                {"new_bundle_value", p.new_bundle_value}};
}

json to_json(const WageRegion& r) {
    return json{{"alpha", r.alpha},
                {"beta", r.beta},
                {"p", r.prices},
                {"new_values", r.new_values},
                {"x_intercepts", r.x_intercepts},
                {"y_intercepts", r.y_intercepts},
                {"e", r.exploitation},
                {"g", r.g},
                {"feasible", r.feasible}};
}

json to_json(const SynthesizedChange& s) {
    return json{{"tc", to_json(s.change)},
                {"j_star", s.pivot + 1},
                {"phi", s.phi},
                {"epsilon", s.epsilon},
                {"labor_interval", {s.labor_interval.first, s.labor_interval.second}}};
}

json to_json(const ScenarioReport& r) {
    const auto side = [](const ScenarioSide& s) {
        return json{{"pi", s.equilibrium.profit_rate},
                    {"p", s.equilibrium.prices},
                    {"values", s.values.values},
                    {"bundle_value", s.values.bundle_value},
                    {"e", s.values.exploitation},
                    {"residual", s.equilibrium.residual},
                    {"max_ratio", s.admissibility.max_ratio}};
    };
    const ScenarioFlags& f = r.flags;
    return json{{"pre", side(r.pre)},
                {"post", side(r.post)},
                {"change", to_json(r.change)},
                {"flags",
                 {{"viable", f.viable},
                  {"culs", f.culs},
                  {"P1", f.p1},
                  {"P2", f.p2},
                  {"P3", f.p3},
                  {"in_B_pre", f.in_b_pre},
                  {"in_B1_post", f.in_b1_post},
                  {"condition_11", f.condition_11},
                  {"region_feasible", f.region_feasible}}},
                {"verdict", std::string(to_string(r.verdict))}};
}

json to_json(const SuiteSummary& s) {
    return json{{"scenarios", s.scenarios},
                {"feasible", s.feasible},
                {"violations", s.violations},
                {"verdicts", s.verdicts},
                {"rising_verdicts", s.rising_verdicts}};
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw EconomyError(ErrorKind::InvalidInput, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& err) {
        throw EconomyError(ErrorKind::InvalidInput, path.string() + ": " + err.what());
    }
}

std::string suite_csv_header() {
    return "seed,n,sector,viable,culs,P1,P2,P3,in_B_pre,in_B1_post,condition_11,region_feasible,"
           "pi,pi_bar,e,e_bar,verdict,rising_pi_bar,rising_e_bar,rising_verdict,okishio_pi_bar,"
           "chain,max_residual,oracle_gap,violation,error";
}

std::string suite_csv_row(const SuiteRow& r) {
    const auto flag = [](bool b) { return b ? "1" : "0"; };
    std::ostringstream os;
    const ScenarioFlags& f = r.flags;
    os << r.seed << ',' << r.n << ',' << (r.n == 0 ? 0 : r.sector + 1) << ',' << flag(f.viable) << ','
       << flag(f.culs) << ',' << flag(f.p1) << ',' << flag(f.p2) << ',' << flag(f.p3) << ',' << flag(f.in_b_pre)
       << ',' << flag(f.in_b1_post) << ',' << flag(f.condition_11) << ',' << flag(f.region_feasible) << ','
       << full(r.pi) << ',' << full(r.pi_bar) << ',' << full(r.e) << ',' << full(r.e_bar) << ','
       << to_string(r.verdict) << ',' << full(r.rising_pi_bar) << ',' << full(r.rising_e_bar) << ','
       << to_string(r.rising_verdict) << ',' << full(r.okishio_pi_bar) << ',' << flag(r.chain_ok) << ','
       << full(r.max_residual) << ',' << (r.oracle_checked ? full(r.oracle_gap) : std::string("NA")) << ','
       << flag(r.violation()) << ',';
    // Error text is quoted; embedded quotes doubled.
    if (!r.error.empty()) {
        os << '"';
        for (char c : r.error) os << (c == '"' ? std::string("\"\"") : std::string(1, c));
        os << '"';
    }
    return os.str();
}

}  // namespace okishio::io

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "okishio/equilibrium.hpp"
#include "okishio/linear_economy.hpp"
#include "okishio/synthesis.hpp"
#include "okishio/technical_change.hpp"
#include "okishio/verify.hpp"

namespace okishio::io {

using nlohmann::json;

/// Economy interchange document:
///
///     {"A": [[...], ...], "L": [...], "b": [...]}
///
/// "A" is stored row-major exactly as the matrix is written: A[j][i] is the
/// amount of commodity j used per unit output of sector i, so column i is
/// sector i's input recipe. Nothing is transposed on load. "b" is optional
/// for commands that do not need a wage bundle.
struct EconomyDocument {
    Technology tech;
    std::optional<WageBundle> bundle;
};

EconomyDocument parse_economy(const json& doc);
json to_json(const Technology& tech, const std::optional<WageBundle>& bundle = std::nullopt);

/// Technical change document: {"sector": i, "column": [...], "labor": x},
/// with a 1-based sector index.
TechChange parse_tech_change(const json& doc);
json to_json(const TechChange& tc);

/// Wage bundle document: {"b": [...]}.
WageBundle parse_wage(const json& doc);
json to_json(const WageBundle& bundle);

json to_json(const Equilibrium& eq);
json to_json(const AssumptionBReport& report);
json to_json(const ChangeClassification& cls);
json to_json(const PropertyReport& props);
json to_json(const WageRegion& region);
json to_json(const SynthesizedChange& synth);
json to_json(const ScenarioReport& report);
json to_json(const SuiteSummary& summary);

/// Reads and parses a JSON file; throws EconomyError(InvalidInput) on I/O or syntax errors.
json read_json(const std::filesystem::path& path);

std::string suite_csv_header();
std::string suite_csv_row(const SuiteRow& row);

}  // namespace okishio::io

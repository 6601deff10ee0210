#pragma once

#include <string>

#include <json.hpp>

#include "graphalg/census.hpp"
#include "graphalg/gate.hpp"
#include "graphalg/graph.hpp"

namespace graphalg {

using json = nlohmann::ordered_json;

/// Full analysis report: input echo, lattice, cycles, class, gate, dimNuc.
/// Deterministic: identical graphs produce identical JSON.
json build_report(const Graph& g);

/// Lattice-only report backing the `ideals` subcommand.
json build_ideals_report(const Graph& g);

/// Gate-only report backing the `decompose` subcommand. When `witness` is
/// set (vertex, count), a stability witness section is included.
json build_decompose_report(const Graph& g,
                            std::optional<std::pair<int, int>> witness = std::nullopt);

/// The 3x3 single-ideal table with citations.
json build_table_report();

json to_json(const CensusStats& stats, const EnumSpec& spec);

/// Text renderings; pure functions of the JSON content.
std::string render_report_text(const json& report);
std::string render_ideals_text(const json& report);
std::string render_decompose_text(const json& report);
std::string render_table_text(const json& report);
std::string render_census_text(const json& report);

/// DOT export; arcs are drawn source -> range.
std::string to_dot(const Graph& g);

} // namespace graphalg

#pragma once

#include <string>

#include "trendreason/analysis.hpp"
#include "trendreason/correlation.hpp"
#include "trendreason/transitions.hpp"

namespace trendreason {

// All renderers produce deterministic, byte-stable text. Scenario numbering
// is 1-based canonical order throughout.

// Fixed-width table mirroring the case-study layout: one column per
// variable, steady rows marked.
std::string render_table(const ScenarioSet& set);

// Header of variable names, then one triplet string per column.
std::string render_csv(const ScenarioSet& set);

// {"model": ..., "variables": [...], "scenarios": [[...], ...]}
std::string render_json(const ScenarioSet& set);

// {"model": ..., "variables": [...], "nodes": [[...], ...], "arcs": [[f,t], ...]}
// with 1-based arc endpoints.
std::string render_graph_json(const ScenarioGraph& graph);

// Graphviz digraph; node labels carry the canonical index and the triplets
// of one representative per variable group.
std::string render_graph_dot(const ScenarioGraph& graph);

// {"removals": [{"i": ..., "j": ..., "value": ...}, ...], "finalModel": "..."}
// with 1-based coefficient indices.
std::string render_trace_json(const RemovalTrace& trace);

// Renderers for a subset of scenarios (query matches, path nodes); rows keep
// their 1-based canonical numbers.
std::string render_selection_table(const ScenarioSet& set, const std::vector<int>& rows);
std::string render_selection_csv(const ScenarioSet& set, const std::vector<int>& rows);
std::string render_selection_json(const ScenarioSet& set, const std::vector<int>& rows);

std::string render_path_table(const ScenarioGraph& graph, const PathResult& path);
std::string render_path_json(const ScenarioGraph& graph, const PathResult& path);

} // namespace trendreason

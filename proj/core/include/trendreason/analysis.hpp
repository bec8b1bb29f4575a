#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "trendreason/transitions.hpp"

namespace trendreason {

// Per-variable constraints on derivative signs. A constraint is a set of
// admissible signs; repeating a variable/field intersects. A filter must
// constrain at least one field to be usable in a query.
class TrendFilter {
public:
    explicit TrendFilter(int variable_count);

    void restrict_dx(int variable, SignSet allowed);
    void restrict_ddx(int variable, SignSet allowed);

    bool empty() const;
    bool matches(const Scenario& s) const;

    int variable_count() const { return int(dx_.size()); }

private:
    std::vector<std::optional<SignSet>> dx_;
    std::vector<std::optional<SignSet>> ddx_;
};

// Text form: comma-separated `VAR.dx=+` / `VAR.ddx=0` terms, or the keyword
// `steady` (all derivatives zero). Throws ParseError on syntax errors or
// unknown variables.
TrendFilter parse_filter(const TrendModel& model, std::string_view text);
TrendFilter parse_filter(const std::vector<std::string>& variables, std::string_view text);

// JSON form: [{"var": "GEN", "field": "dx", "signs": ["+"]}, ...]
TrendFilter parse_filter_json(const std::vector<std::string>& variables, std::string_view json_text);

// Indices of scenarios with every derivative zero.
std::vector<int> steady_states(const ScenarioSet& set);

// Directed cycles through a steady-state node: node sequences that start and
// end at the same steady node, 2..max_len arcs, no other repeated node.
// Sorted by length, then lexicographically. Throws std::invalid_argument if
// the graph has no steady state.
std::vector<std::vector<int>> stabilisation_loops(const ScenarioGraph& graph, int max_len);

// True iff some stabilisation loop exists (cycle through a steady state).
bool is_stable(const ScenarioGraph& graph);

// Scenarios satisfying every filter constraint, as indices into the set.
// Throws std::invalid_argument on an unconstrained filter.
std::vector<int> query(const ScenarioSet& set, const TrendFilter& filter);

// Node sequence of a path; empty means no path. A single node is a valid
// zero-length path.
using PathResult = std::vector<int>;

// Raised when a path endpoint filter matches no node (distinct from a valid
// empty no-path result).
class FilterMatchesNothing : public std::runtime_error {
public:
    explicit FilterMatchesNothing(const std::string& what) : std::runtime_error(what) {}
};

// Shortest path from any node matching `from` to any node matching `to`.
// Ties broken toward lower canonical indices. Throws FilterMatchesNothing
// when either filter has no matching node.
PathResult path_query(const ScenarioGraph& graph, const TrendFilter& from, const TrendFilter& to);

// Scenarios present in every input set / in any input set. Inputs must range
// over the same variable names; sets are reconciled in the first input's
// variable order. Throws std::invalid_argument on mismatched variables or no
// inputs.
ScenarioSet core(std::span<const ScenarioSet> sets);
ScenarioSet envelope(std::span<const ScenarioSet> sets);

} // namespace trendreason

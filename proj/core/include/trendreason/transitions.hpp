#pragma once

#include <utility>
#include <vector>

#include "trendreason/solver.hpp"

namespace trendreason {

// One-dimensional smoothness rules: which triplets a variable can move to in
// a single qualitative time step. A quantity changes continuously, so the
// first derivative can only cross between + and - through 0, and the second
// derivative steers the first. No triplet succeeds itself.
//
// With positive_only (the default) both endpoints keep a positive value;
// otherwise the decreasing rows gain their zero-value targets.
class TransitionTable {
public:
    explicit TransitionTable(bool positive_only = true);

    bool positive_only() const { return positive_only_; }

    // Successors of a positive-valued triplet, canonical order.
    // Throws std::invalid_argument if t.value != plus.
    std::vector<Triplet> successors(const Triplet& t) const;

    // Same triplet or a one-step successor. Positive-valued triplets only.
    bool step_allowed(const Triplet& from, const Triplet& to) const;

private:
    bool positive_only_;
};

// Directed graph over a scenario set; arcs are 0-based (from, to) index
// pairs into the canonical scenario order.
struct ScenarioGraph {
    ScenarioSet nodes;
    std::vector<std::pair<int, int>> arcs;

    std::vector<std::vector<int>> out_adjacency() const;
    std::vector<std::vector<int>> in_adjacency() const;
};

// True iff b differs from a and every variable either keeps its triplet or
// makes an allowed one-dimensional move. Any number of variables may move in
// the same step. Throws std::invalid_argument on mismatched lengths.
bool scenario_transition_allowed(const Scenario& a, const Scenario& b,
                                 const TransitionTable& table = TransitionTable{});

// All ordered pairs passing scenario_transition_allowed, arcs sorted by
// (from, to). Throws std::invalid_argument on an empty set.
ScenarioGraph build_graph(const ScenarioSet& set, const TransitionTable& table = TransitionTable{});

} // namespace trendreason

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "trendreason/model.hpp"
#include "trendreason/sign.hpp"

namespace trendreason {

// Signs of one variable's value and first two time derivatives. Scenario
// triplets always carry a positive value; only the transition machinery ever
// sees zero-valued triplets.
struct Triplet {
    Sign value = Sign::Plus;
    Sign dx = Sign::Zero;
    Sign ddx = Sign::Zero;

    friend constexpr auto operator<=>(const Triplet&, const Triplet&) = default;

    std::string to_string() const;
};

std::optional<Triplet> triplet_from_string(std::string_view text);

// One consistent assignment: a triplet per model variable, declaration order.
using Scenario = std::vector<Triplet>;

std::string scenario_to_string(const Scenario& s);
bool is_steady(const Scenario& s);

// The complete solution of a model: all consistent scenarios, sorted
// lexicographically by per-variable (dx, ddx) with plus < zero < minus,
// duplicates removed. `label` is presentation metadata.
struct ScenarioSet {
    std::vector<std::string> variables;
    std::vector<Scenario> scenarios;
    std::string label;

    friend bool operator==(const ScenarioSet& a, const ScenarioSet& b) {
        return a.variables == b.variables && a.scenarios == b.scenarios;
    }
};

// Sorts and deduplicates into canonical form.
ScenarioSet make_scenario_set(std::vector<std::string> variables, std::vector<Scenario> scenarios,
                              std::string label = "");

struct SolveOptions {
    // Relax DP/IP to constrain only the first derivative. Off by default:
    // the strict form is what reproduces the case-study scenario tables.
    bool dp_weak = false;
};

// True iff ty is a consistent image of tx under the relation shape:
//   ty.dx  = slope * tx.dx
//   ty.ddx in qsum(curvature * tx.dx^2, slope * tx.ddx)
// Value signs are not constrained here; positivity is global.
bool relation_allows(RelationKind kind, const Triplet& tx, const Triplet& ty,
                     const SolveOptions& opts = {});

// All scenarios consistent with every relation, value signs fixed to plus.
// Backtracking over the 9-state per-variable domains with arc-consistency
// propagation. Throws std::invalid_argument if the model does not validate.
ScenarioSet solve(const TrendModel& model, const SolveOptions& opts = {});

// Brute-force cap: TRENDREASON_ORACLE_CAP when set, else 6.
int default_oracle_cap();

// Independent oracle: flat enumeration of all 9^n assignments, filtered by
// relation_allows. Throws std::invalid_argument above the cap.
ScenarioSet solve_bruteforce(const TrendModel& model, const SolveOptions& opts = {},
                             int cap = default_oracle_cap());

// Partition of variable indices: two variables share a block iff their
// triplet columns agree in every scenario. Blocks ordered by first member,
// members ascending. Throws std::invalid_argument on an empty set.
std::vector<std::vector<int>> variable_groups(const ScenarioSet& set);

} // namespace trendreason

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trendreason/solver.hpp"

namespace trendreason {

// Square symmetric matrix of correlation coefficients with unit diagonal.
// Always an input here, never estimated.
struct CorrelationMatrix {
    std::vector<std::string> labels;
    std::vector<double> entries; // row major, n x n

    int size() const { return int(labels.size()); }
    double at(int i, int j) const { return entries[size_t(i) * labels.size() + size_t(j)]; }
    double& at(int i, int j) { return entries[size_t(i) * labels.size() + size_t(j)]; }
};

// Invariant check: square, |c| <= 1 + 1e-12, symmetric and unit diagonal
// within 1e-9. Returns human-readable problems; empty means valid.
std::vector<std::string> matrix_problems(const CorrelationMatrix& m);

// CSV with a header row of labels and a leading label column:
//   ,X1,X2
//   X1,1,0.5
//   X2,0.5,1
// Throws ParseError on malformed input or invariant violations.
CorrelationMatrix parse_correlation_csv(std::string_view text);

// Eq.-style reading of the matrix: every coefficient above the threshold in
// magnitude becomes DP (positive) or IP (negative) between the pair; all
// labels become variables. Throws std::invalid_argument on a bad matrix or
// threshold outside [0, 1).
TrendModel matrix_to_model(const CorrelationMatrix& m, double threshold = 0.0);

// True iff the model admits no trend movement at all: every scenario has a
// zero first derivative for every variable (ddx free). Throws
// std::invalid_argument on an empty set.
bool is_degenerate(const ScenarioSet& set);

struct Removal {
    int i; // 0-based label indices, i < j
    int j;
    double value;

    friend bool operator==(const Removal&, const Removal&) = default;
};

struct RemovalTrace {
    std::vector<Removal> removals;
    TrendModel final_model;
    ScenarioSet final_scenarios;
    bool exhausted = false; // no coefficients left and still degenerate
};

// Iteratively drops the off-diagonal coefficient of smallest absolute value
// (ties toward the lexicographically smallest index pair) until the
// generated model stops being degenerate. Only coefficients currently
// producing a relation are candidates.
RemovalTrace removal_heuristic(const CorrelationMatrix& m, double threshold = 0.0,
                               const SolveOptions& opts = {});

} // namespace trendreason

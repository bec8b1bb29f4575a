#include "trendreason/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace trendreason {

namespace {

constexpr double kSymmetryTol = 1e-9;
constexpr double kRangeTol = 1e-12;

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    size_t pos = 0;
    while (pos <= line.size()) {
        size_t comma = line.find(',', pos);
        std::string_view cell =
            line.substr(pos, comma == std::string_view::npos ? line.size() - pos : comma - pos);
        while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
        while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r'))
            cell.remove_suffix(1);
        cells.emplace_back(cell);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return cells;
}

} // namespace

std::vector<std::string> matrix_problems(const CorrelationMatrix& m) {
    std::vector<std::string> problems;
    const int n = m.size();
    if (n == 0) problems.push_back("matrix is empty");
    if (m.entries.size() != size_t(n) * size_t(n)) {
        problems.push_back("matrix is not square");
        return problems;
    }
    for (int i = 0; i < n; ++i) {
        if (std::abs(m.at(i, i) - 1.0) > kSymmetryTol)
            problems.push_back("diagonal entry for " + m.labels[size_t(i)] + " is not 1");
        for (int j = 0; j < n; ++j) {
            if (std::abs(m.at(i, j)) > 1.0 + kRangeTol)
                problems.push_back("coefficient (" + m.labels[size_t(i)] + ", " + m.labels[size_t(j)] +
                                   ") outside [-1, 1]");
            if (j > i && std::abs(m.at(i, j) - m.at(j, i)) > kSymmetryTol)
                problems.push_back("matrix not symmetric at (" + m.labels[size_t(i)] + ", " +
                                   m.labels[size_t(j)] + ")");
        }
    }
    return problems;
}

CorrelationMatrix parse_correlation_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (line.empty() || line == "\r") continue;
        rows.push_back(split_csv_line(line));
    }
    if (rows.size() < 2) throw ParseError("correlation CSV needs a header and at least one row");

    CorrelationMatrix m;
    m.labels.assign(rows[0].begin() + 1, rows[0].end());
    const int n = int(m.labels.size());
    if (int(rows.size()) - 1 != n)
        throw ParseError("correlation CSV is not square: " + std::to_string(n) + " columns, " +
                         std::to_string(rows.size() - 1) + " rows");

    m.entries.assign(size_t(n) * size_t(n), 0.0);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[size_t(i) + 1];
        if (int(row.size()) != n + 1)
            throw ParseError("correlation CSV row " + std::to_string(i + 2) + " has " +
                             std::to_string(row.size()) + " cells, expected " + std::to_string(n + 1));
        if (row[0] != m.labels[size_t(i)])
            throw ParseError("correlation CSV row label '" + row[0] + "' does not match header '" +
                             m.labels[size_t(i)] + "'");
        for (int j = 0; j < n; ++j) {
            try {
                size_t used = 0;
                m.at(i, j) = std::stod(row[size_t(j) + 1], &used);
                if (used != row[size_t(j) + 1].size()) throw std::invalid_argument("trailing junk");
            } catch (const std::exception&) {
                throw ParseError("bad number in correlation CSV at row " + std::to_string(i + 2) +
                                 ", column " + std::to_string(j + 2) + ": '" + row[size_t(j) + 1] + "'");
            }
        }
    }

    auto problems = matrix_problems(m);
    if (!problems.empty()) {
        std::string msg = "invalid correlation matrix";
        for (const auto& p : problems) msg += "\n  " + p;
        throw ParseError(msg);
    }
    return m;
}

TrendModel matrix_to_model(const CorrelationMatrix& m, double threshold) {
    auto problems = matrix_problems(m);
    if (!problems.empty()) throw std::invalid_argument("invalid correlation matrix: " + problems[0]);
    if (threshold < 0.0 || threshold >= 1.0)
        throw std::invalid_argument("threshold must be in [0, 1)");

    TrendModel model;
    model.variables = m.labels;
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j) {
            const double c = m.at(i, j);
            if (std::abs(c) <= threshold) continue;
            model.relations.push_back({c > 0 ? RelationKind::DP : RelationKind::IP, i, j});
        }
    return model;
}

bool is_degenerate(const ScenarioSet& set) {
    if (set.scenarios.empty()) throw std::invalid_argument("is_degenerate: empty scenario set");
    for (const Scenario& s : set.scenarios)
        for (const Triplet& t : s)
            if (t.dx != Sign::Zero) return false;
    return true;
}

RemovalTrace removal_heuristic(const CorrelationMatrix& m, double threshold, const SolveOptions& opts) {
    CorrelationMatrix work = m;
    RemovalTrace trace;

    while (true) {
        trace.final_model = matrix_to_model(work, threshold);
        trace.final_scenarios = solve(trace.final_model, opts);
        if (!is_degenerate(trace.final_scenarios)) {
            trace.exhausted = false;
            return trace;
        }

        // Weakest contributing coefficient; lexicographic (i, j) on ties.
        int best_i = -1, best_j = -1;
        double best_abs = 0.0;
        for (int i = 0; i < work.size(); ++i)
            for (int j = i + 1; j < work.size(); ++j) {
                const double c = work.at(i, j);
                if (std::abs(c) <= threshold) continue;
                if (best_i < 0 || std::abs(c) < best_abs) {
                    best_i = i;
                    best_j = j;
                    best_abs = std::abs(c);
                }
            }
        if (best_i < 0) {
            trace.exhausted = true;
            return trace;
        }
        trace.removals.push_back({best_i, best_j, work.at(best_i, best_j)});
        work.at(best_i, best_j) = 0.0;
        work.at(best_j, best_i) = 0.0;
    }
}

} // namespace trendreason

#include "trendreason/transitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace trendreason {

namespace {

Triplet t(char v, char d, char dd) {
    return Triplet{*sign_from_char(v), *sign_from_char(d), *sign_from_char(dd)};
}

int state_index(const Triplet& tr) {
    return static_cast<int>(tr.dx) * 3 + static_cast<int>(tr.ddx);
}

struct Row {
    Triplet from;
    std::vector<Triplet> positive;
    std::vector<Triplet> zero_value; // extra targets when zero values are allowed
};

// Successor table for positive-valued triplets, indexed by (dx, ddx).
// The linear-increase row reaches {+++, ++-} and the slowing-increase row
// ++- is the source of {++0, +0-, +00}: a first derivative cannot jump
// between + and - without passing zero.
const std::vector<Row>& table_rows() {
    static const std::vector<Row> rows = {
        {t('+', '+', '+'), {t('+', '+', '0')}, {}},
        {t('+', '+', '0'), {t('+', '+', '+'), t('+', '+', '-')}, {}},
        {t('+', '+', '-'), {t('+', '+', '0'), t('+', '0', '-'), t('+', '0', '0')}, {}},
        {t('+', '0', '+'), {t('+', '+', '+')}, {}},
        {t('+', '0', '0'), {t('+', '+', '+'), t('+', '-', '-')}, {}},
        {t('+', '0', '-'), {t('+', '-', '-')}, {}},
        {t('+', '-', '+'),
         {t('+', '-', '0'), t('+', '0', '+'), t('+', '0', '0')},
         {t('0', '-', '+'), t('0', '0', '+'), t('0', '0', '0'), t('0', '-', '0')}},
        {t('+', '-', '0'), {t('+', '-', '+'), t('+', '-', '-')}, {t('0', '-', '0')}},
        {t('+', '-', '-'), {t('+', '-', '0')}, {t('0', '-', '-'), t('0', '-', '0')}},
    };
    return rows;
}

} // namespace

TransitionTable::TransitionTable(bool positive_only) : positive_only_(positive_only) {}

std::vector<Triplet> TransitionTable::successors(const Triplet& tr) const {
    if (tr.value != Sign::Plus)
        throw std::invalid_argument("transition table: source triplet must have a positive value");
    for (const Row& row : table_rows()) {
        if (row.from != tr) continue;
        std::vector<Triplet> out = row.positive;
        if (!positive_only_) out.insert(out.end(), row.zero_value.begin(), row.zero_value.end());
        std::sort(out.begin(), out.end());
        return out;
    }
    return {};
}

bool TransitionTable::step_allowed(const Triplet& from, const Triplet& to) const {
    if (from == to) return true;
    for (const Row& row : table_rows()) {
        if (row.from != from) continue;
        if (std::find(row.positive.begin(), row.positive.end(), to) != row.positive.end()) return true;
        if (!positive_only_ &&
            std::find(row.zero_value.begin(), row.zero_value.end(), to) != row.zero_value.end())
            return true;
        return false;
    }
    return false;
}

bool scenario_transition_allowed(const Scenario& a, const Scenario& b, const TransitionTable& table) {
    if (a.size() != b.size())
        throw std::invalid_argument("scenario transition: scenarios from different models");
    if (a == b) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!table.step_allowed(a[i], b[i])) return false;
    return true;
}

ScenarioGraph build_graph(const ScenarioSet& set, const TransitionTable& table) {
    if (set.scenarios.empty()) throw std::invalid_argument("build_graph: empty scenario set");

    // 9x9 step matrix over positive triplet states keeps the pair sweep cheap.
    bool step[9][9];
    for (const Row& from_row : table_rows())
        for (const Row& to_row : table_rows())
            step[state_index(from_row.from)][state_index(to_row.from)] =
                table.step_allowed(from_row.from, to_row.from);

    ScenarioGraph graph;
    graph.nodes = set;
    const int m = int(set.scenarios.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const Scenario& a = set.scenarios[size_t(i)];
            const Scenario& b = set.scenarios[size_t(j)];
            bool ok = true;
            for (size_t v = 0; v < a.size() && ok; ++v)
                ok = step[state_index(a[v])][state_index(b[v])];
            if (ok) graph.arcs.emplace_back(i, j);
        }
    return graph;
}

std::vector<std::vector<int>> ScenarioGraph::out_adjacency() const {
    std::vector<std::vector<int>> adj(nodes.scenarios.size());
    for (auto [from, to] : arcs) adj[size_t(from)].push_back(to);
    return adj;
}

std::vector<std::vector<int>> ScenarioGraph::in_adjacency() const {
    std::vector<std::vector<int>> adj(nodes.scenarios.size());
    for (auto [from, to] : arcs) adj[size_t(to)].push_back(from);
    return adj;
}

} // namespace trendreason

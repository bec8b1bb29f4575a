#include "trendreason/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

namespace trendreason {

TrendFilter::TrendFilter(int variable_count)
    : dx_(size_t(variable_count)), ddx_(size_t(variable_count)) {}

void TrendFilter::restrict_dx(int variable, SignSet allowed) {
    auto& slot = dx_.at(size_t(variable));
    slot = slot ? slot->intersect(allowed) : allowed;
}

void TrendFilter::restrict_ddx(int variable, SignSet allowed) {
    auto& slot = ddx_.at(size_t(variable));
    slot = slot ? slot->intersect(allowed) : allowed;
}

bool TrendFilter::empty() const {
    auto unset = [](const std::optional<SignSet>& s) { return !s.has_value(); };
    return std::all_of(dx_.begin(), dx_.end(), unset) && std::all_of(ddx_.begin(), ddx_.end(), unset);
}

bool TrendFilter::matches(const Scenario& s) const {
    for (size_t v = 0; v < dx_.size(); ++v) {
        if (dx_[v] && !dx_[v]->contains(s[v].dx)) return false;
        if (ddx_[v] && !ddx_[v]->contains(s[v].ddx)) return false;
    }
    return true;
}

namespace {

int require_variable(const std::vector<std::string>& variables, std::string_view name) {
    for (int i = 0; i < int(variables.size()); ++i)
        if (variables[size_t(i)] == name) return i;
    throw ParseError("unknown variable in filter: " + std::string(name));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

TrendFilter parse_filter(const std::vector<std::string>& variables, std::string_view text) {
    TrendFilter filter(int(variables.size()));

    if (trim(text) == "steady") {
        for (int v = 0; v < int(variables.size()); ++v) {
            filter.restrict_dx(v, SignSet{Sign::Zero});
            filter.restrict_ddx(v, SignSet{Sign::Zero});
        }
        return filter;
    }

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view term =
            trim(text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos));
        pos = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
        if (term.empty()) continue;

        size_t dot = term.find('.');
        size_t eq = term.find('=');
        if (dot == std::string_view::npos || eq == std::string_view::npos || eq < dot)
            throw ParseError("bad filter term (expected VAR.dx=+ or VAR.ddx=-): " + std::string(term));

        const int var = require_variable(variables, trim(term.substr(0, dot)));
        const std::string_view field = trim(term.substr(dot + 1, eq - dot - 1));
        const std::string_view value = trim(term.substr(eq + 1));

        SignSet signs;
        for (char c : value) {
            auto s = sign_from_char(c);
            if (!s) throw ParseError("bad sign in filter term: " + std::string(term));
            signs.insert(*s);
        }
        if (signs.empty()) throw ParseError("empty sign list in filter term: " + std::string(term));

        if (field == "dx")
            filter.restrict_dx(var, signs);
        else if (field == "ddx")
            filter.restrict_ddx(var, signs);
        else
            throw ParseError("bad filter field (want dx or ddx): " + std::string(term));
    }

    if (filter.empty()) throw ParseError("filter constrains nothing");
    return filter;
}

TrendFilter parse_filter(const TrendModel& model, std::string_view text) {
    return parse_filter(model.variables, text);
}

TrendFilter parse_filter_json(const std::vector<std::string>& variables, std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad filter JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("filter JSON must be an array of constraints");

    TrendFilter filter(int(variables.size()));
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("var") || !item.contains("field") ||
            !item.contains("signs"))
            throw ParseError("filter JSON constraint needs var, field, signs");
        const int var = require_variable(variables, item["var"].get<std::string>());
        const std::string field = item["field"].get<std::string>();
        SignSet signs;
        for (const auto& sv : item["signs"]) {
            const std::string s = sv.get<std::string>();
            auto sign = s.size() == 1 ? sign_from_char(s[0]) : std::nullopt;
            if (!sign) throw ParseError("bad sign in filter JSON: " + s);
            signs.insert(*sign);
        }
        if (signs.empty()) throw ParseError("empty sign list in filter JSON");
        if (field == "dx")
            filter.restrict_dx(var, signs);
        else if (field == "ddx")
            filter.restrict_ddx(var, signs);
        else
            throw ParseError("bad filter JSON field: " + field);
    }
    if (filter.empty()) throw ParseError("filter constrains nothing");
    return filter;
}

std::vector<int> steady_states(const ScenarioSet& set) {
    std::vector<int> out;
    for (int i = 0; i < int(set.scenarios.size()); ++i)
        if (is_steady(set.scenarios[size_t(i)])) out.push_back(i);
    return out;
}

namespace {

void collect_cycles(int node, int origin, int remaining, const std::vector<std::vector<int>>& adj,
                    std::vector<int>& path, std::vector<bool>& on_path,
                    std::vector<std::vector<int>>& out) {
    for (int next : adj[size_t(node)]) {
        if (next == origin) {
            if (path.size() >= 2) {
                auto cycle = path;
                cycle.push_back(origin);
                out.push_back(std::move(cycle));
            }
            continue;
        }
        if (remaining <= 1 || on_path[size_t(next)]) continue;
        path.push_back(next);
        on_path[size_t(next)] = true;
        collect_cycles(next, origin, remaining - 1, adj, path, on_path, out);
        on_path[size_t(next)] = false;
        path.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> stabilisation_loops(const ScenarioGraph& graph, int max_len) {
    const auto steady = steady_states(graph.nodes);
    if (steady.empty())
        throw std::invalid_argument("stabilisation_loops: graph has no steady state");

    const auto adj = graph.out_adjacency();
    std::vector<std::vector<int>> cycles;
    for (int origin : steady) {
        std::vector<int> path{origin};
        std::vector<bool> on_path(graph.nodes.scenarios.size(), false);
        on_path[size_t(origin)] = true;
        collect_cycles(origin, origin, max_len, adj, path, on_path, cycles);
    }
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return cycles;
}

namespace {

std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj, std::span<const int> sources) {
    std::vector<bool> seen(adj.size(), false);
    std::deque<int> queue;
    for (int s : sources) {
        if (!seen[size_t(s)]) {
            seen[size_t(s)] = true;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int node = queue.front();
        queue.pop_front();
        for (int next : adj[size_t(node)])
            if (!seen[size_t(next)]) {
                seen[size_t(next)] = true;
                queue.push_back(next);
            }
    }
    return seen;
}

} // namespace

bool is_stable(const ScenarioGraph& graph) {
    const auto steady = steady_states(graph.nodes);
    if (steady.empty()) return false;
    const auto out = graph.out_adjacency();
    const auto in = graph.in_adjacency();
    for (int s : steady) {
        // A cycle through s exists iff s reaches one of its predecessors.
        const int source[] = {s};
        const auto fwd = reachable_from(out, source);
        for (int pred : in[size_t(s)])
            if (fwd[size_t(pred)]) return true;
    }
    return false;
}

std::vector<int> query(const ScenarioSet& set, const TrendFilter& filter) {
    if (filter.empty()) throw std::invalid_argument("query: filter constrains nothing");
    if (filter.variable_count() != int(set.variables.size()))
        throw std::invalid_argument("query: filter built for a different model");
    std::vector<int> out;
    for (int i = 0; i < int(set.scenarios.size()); ++i)
        if (filter.matches(set.scenarios[size_t(i)])) out.push_back(i);
    return out;
}

PathResult path_query(const ScenarioGraph& graph, const TrendFilter& from, const TrendFilter& to) {
    const auto sources = query(graph.nodes, from);
    const auto targets = query(graph.nodes, to);
    if (sources.empty()) throw FilterMatchesNothing("path-from filter matches no scenario");
    if (targets.empty()) throw FilterMatchesNothing("path-to filter matches no scenario");

    const size_t m = graph.nodes.scenarios.size();
    constexpr int kUnreached = -1;

    // Multi-source BFS distances from every `from` node.
    const auto out = graph.out_adjacency();
    std::vector<int> dist(m, kUnreached);
    std::deque<int> queue;
    for (int s : sources) {
        dist[size_t(s)] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const int node = queue.front();
        queue.pop_front();
        for (int next : out[size_t(node)])
            if (dist[size_t(next)] == kUnreached) {
                dist[size_t(next)] = dist[size_t(node)] + 1;
                queue.push_back(next);
            }
    }

    // Lowest-index target at the minimal distance; targets are ascending.
    int goal = -1;
    for (int t : targets)
        if (dist[size_t(t)] != kUnreached && (goal < 0 || dist[size_t(t)] < dist[size_t(goal)]))
            goal = t;
    if (goal < 0) return {};

    // Walk back choosing the lowest-index predecessor on a shortest path.
    const auto in = graph.in_adjacency();
    PathResult path{goal};
    for (int node = goal; dist[size_t(node)] > 0;) {
        int best = -1;
        for (int pred : in[size_t(node)])
            if (dist[size_t(pred)] == dist[size_t(node)] - 1 && (best < 0 || pred < best)) best = pred;
        node = best;
        path.push_back(node);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

// Reorders each input into `order` (the first set's declaration order) so
// scenarios from different forecasters compare per variable name.
std::vector<Scenario> reordered(const ScenarioSet& set, const std::vector<std::string>& order) {
    std::vector<int> perm(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        auto it = std::find(set.variables.begin(), set.variables.end(), order[i]);
        if (it == set.variables.end())
            throw std::invalid_argument("scenario sets range over different variables");
        perm[i] = int(it - set.variables.begin());
    }
    std::vector<Scenario> out;
    out.reserve(set.scenarios.size());
    for (const Scenario& s : set.scenarios) {
        Scenario r(order.size());
        for (size_t i = 0; i < order.size(); ++i) r[i] = s[size_t(perm[i])];
        out.push_back(std::move(r));
    }
    return out;
}

void require_same_variables(std::span<const ScenarioSet> sets) {
    if (sets.empty()) throw std::invalid_argument("no scenario sets given");
    const auto names = [](const ScenarioSet& s) {
        return std::set<std::string>(s.variables.begin(), s.variables.end());
    };
    const auto base = names(sets.front());
    if (base.size() != sets.front().variables.size())
        throw std::invalid_argument("scenario set has duplicate variable names");
    for (const ScenarioSet& s : sets.subspan(1))
        if (names(s) != base) throw std::invalid_argument("scenario sets range over different variables");
}

} // namespace

ScenarioSet core(std::span<const ScenarioSet> sets) {
    require_same_variables(sets);
    const auto& order = sets.front().variables;

    std::vector<Scenario> acc = reordered(sets.front(), order);
    std::sort(acc.begin(), acc.end());
    for (const ScenarioSet& s : sets.subspan(1)) {
        auto other = reordered(s, order);
        std::sort(other.begin(), other.end());
        std::vector<Scenario> merged;
        std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(),
                              std::back_inserter(merged));
        acc = std::move(merged);
    }
    return make_scenario_set(order, std::move(acc), "core");
}

ScenarioSet envelope(std::span<const ScenarioSet> sets) {
    require_same_variables(sets);
    const auto& order = sets.front().variables;

    std::vector<Scenario> acc;
    for (const ScenarioSet& s : sets) {
        auto other = reordered(s, order);
        acc.insert(acc.end(), other.begin(), other.end());
    }
    return make_scenario_set(order, std::move(acc), "envelope");
}

} // namespace trendreason

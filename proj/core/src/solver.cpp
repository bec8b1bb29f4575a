#include "trendreason/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace trendreason {

std::string Triplet::to_string() const {
    return std::string{to_char(value), to_char(dx), to_char(ddx)};
}

std::optional<Triplet> triplet_from_string(std::string_view text) {
    if (text.size() != 3) return std::nullopt;
    auto v = sign_from_char(text[0]);
    auto d = sign_from_char(text[1]);
    auto dd = sign_from_char(text[2]);
    if (!v || !d || !dd) return std::nullopt;
    return Triplet{*v, *d, *dd};
}

std::string scenario_to_string(const Scenario& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += s[i].to_string();
    }
    return out;
}

bool is_steady(const Scenario& s) {
    return std::all_of(s.begin(), s.end(),
                       [](const Triplet& t) { return t.dx == Sign::Zero && t.ddx == Sign::Zero; });
}

ScenarioSet make_scenario_set(std::vector<std::string> variables, std::vector<Scenario> scenarios,
                              std::string label) {
    std::sort(scenarios.begin(), scenarios.end());
    scenarios.erase(std::unique(scenarios.begin(), scenarios.end()), scenarios.end());
    return ScenarioSet{std::move(variables), std::move(scenarios), std::move(label)};
}

bool relation_allows(RelationKind kind, const Triplet& tx, const Triplet& ty,
                     const SolveOptions& opts) {
    const RelationShape shape = relation_shape(kind);
    if (ty.dx != qmul(shape.slope, tx.dx)) return false;
    if (opts.dp_weak && (kind == RelationKind::DP || kind == RelationKind::IP)) return true;
    // Chain rule: DDY = curvature * DX^2 + slope * DDX, as a sign sum.
    const SignSet allowed = qsum(qmul(shape.curvature, qsq(tx.dx)), qmul(shape.slope, tx.ddx));
    return allowed.contains(ty.ddx);
}

namespace {

// Per-variable search states: the 9 (dx, ddx) pairs in canonical order.
constexpr int kStates = 9;

constexpr Sign kSignByIndex[3] = {Sign::Plus, Sign::Zero, Sign::Minus};

Triplet state_to_triplet(int state) {
    return Triplet{Sign::Plus, kSignByIndex[state / 3], kSignByIndex[state % 3]};
}

using Domain = std::uint16_t; // 9-bit mask over states
constexpr Domain kFullDomain = (1u << kStates) - 1;

// One binary constraint with per-state support masks in both directions.
struct Arc {
    int x, y;
    std::array<Domain, kStates> y_support_of_x; // states of y allowed for each x state
    std::array<Domain, kStates> x_support_of_y;
};

std::vector<Arc> build_arcs(const TrendModel& model, const SolveOptions& opts) {
    std::vector<Arc> arcs;
    arcs.reserve(model.relations.size());
    for (const Relation& r : model.relations) {
        Arc arc;
        arc.x = r.x;
        arc.y = r.y;
        arc.y_support_of_x.fill(0);
        arc.x_support_of_y.fill(0);
        for (int sx = 0; sx < kStates; ++sx)
            for (int sy = 0; sy < kStates; ++sy)
                if (relation_allows(r.kind, state_to_triplet(sx), state_to_triplet(sy), opts)) {
                    arc.y_support_of_x[size_t(sx)] |= Domain(1u << sy);
                    arc.x_support_of_y[size_t(sy)] |= Domain(1u << sx);
                }
        arcs.push_back(arc);
    }
    return arcs;
}

// AC-3 to fixpoint. Returns false on a wiped-out domain.
bool propagate(std::vector<Domain>& doms, const std::vector<Arc>& arcs,
               const std::vector<std::vector<int>>& arcs_touching) {
    std::vector<int> queue(arcs.size());
    std::iota(queue.begin(), queue.end(), 0);
    std::vector<char> queued(arcs.size(), 1);

    while (!queue.empty()) {
        const int ai = queue.back();
        queue.pop_back();
        queued[size_t(ai)] = 0;
        const Arc& arc = arcs[size_t(ai)];

        auto revise = [&](int var, int other, const std::array<Domain, kStates>& support) {
            Domain revised = 0;
            for (int s = 0; s < kStates; ++s)
                if ((doms[size_t(var)] >> s) & 1u)
                    if (support[size_t(s)] & doms[size_t(other)]) revised |= Domain(1u << s);
            if (revised == doms[size_t(var)]) return true;
            doms[size_t(var)] = revised;
            if (revised == 0) return false;
            for (int other_arc : arcs_touching[size_t(var)])
                if (!queued[size_t(other_arc)]) {
                    queued[size_t(other_arc)] = 1;
                    queue.push_back(other_arc);
                }
            return true;
        };

        if (!revise(arc.x, arc.y, arc.y_support_of_x)) return false;
        if (!revise(arc.y, arc.x, arc.x_support_of_y)) return false;
    }
    return true;
}

void search(std::vector<Domain> doms, const std::vector<Arc>& arcs,
            const std::vector<std::vector<int>>& arcs_touching, const std::vector<int>& var_order,
            std::vector<Scenario>& out) {
    if (!propagate(doms, arcs, arcs_touching)) return;

    int branch_var = -1;
    for (int v : var_order)
        if (std::popcount(doms[size_t(v)]) > 1) {
            branch_var = v;
            break;
        }

    if (branch_var < 0) {
        Scenario s(doms.size());
        for (size_t v = 0; v < doms.size(); ++v)
            s[v] = state_to_triplet(std::countr_zero(doms[v]));
        out.push_back(std::move(s));
        return;
    }

    for (int state = 0; state < kStates; ++state) {
        if (!((doms[size_t(branch_var)] >> state) & 1u)) continue;
        std::vector<Domain> next = doms;
        next[size_t(branch_var)] = Domain(1u << state);
        search(std::move(next), arcs, arcs_touching, var_order, out);
    }
}

void require_valid(const TrendModel& model) {
    auto violations = validate(model);
    if (violations.empty()) return;
    std::string msg = "invalid model";
    for (const auto& v : violations) msg += "; " + v.message;
    throw std::invalid_argument(msg);
}

} // namespace

ScenarioSet solve(const TrendModel& model, const SolveOptions& opts) {
    require_valid(model);

    const size_t n = model.variables.size();
    const auto arcs = build_arcs(model, opts);

    std::vector<std::vector<int>> arcs_touching(n);
    std::vector<int> degree(n, 0);
    for (int i = 0; i < int(arcs.size()); ++i) {
        arcs_touching[size_t(arcs[size_t(i)].x)].push_back(i);
        arcs_touching[size_t(arcs[size_t(i)].y)].push_back(i);
        ++degree[size_t(arcs[size_t(i)].x)];
        ++degree[size_t(arcs[size_t(i)].y)];
    }

    // Most-constrained variables first; declaration order breaks ties.
    std::vector<int> var_order(n);
    std::iota(var_order.begin(), var_order.end(), 0);
    std::stable_sort(var_order.begin(), var_order.end(),
                     [&](int a, int b) { return degree[size_t(a)] > degree[size_t(b)]; });

    std::vector<Scenario> found;
    search(std::vector<Domain>(n, kFullDomain), arcs, arcs_touching, var_order, found);
    return make_scenario_set(model.variables, std::move(found), model.name);
}

int default_oracle_cap() {
    if (const char* env = std::getenv("TRENDREASON_ORACLE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return int(v);
    }
    return 6;
}

ScenarioSet solve_bruteforce(const TrendModel& model, const SolveOptions& opts, int cap) {
    require_valid(model);
    const int n = int(model.variables.size());
    if (n > cap)
        throw std::invalid_argument("brute-force cap exceeded: " + std::to_string(n) + " variables > " +
                                    std::to_string(cap));

    // Allowed-pair tables per relation, then a flat odometer over all 9^n
    // assignments. No pruning beyond short-circuiting the conjunction.
    std::vector<std::array<bool, kStates * kStates>> allowed(model.relations.size());
    for (size_t ri = 0; ri < model.relations.size(); ++ri) {
        const Relation& r = model.relations[ri];
        for (int sx = 0; sx < kStates; ++sx)
            for (int sy = 0; sy < kStates; ++sy)
                allowed[ri][size_t(sx * kStates + sy)] =
                    relation_allows(r.kind, state_to_triplet(sx), state_to_triplet(sy), opts);
    }

    std::vector<int> state(size_t(n), 0);
    std::vector<Scenario> found;
    while (true) {
        bool ok = true;
        for (size_t ri = 0; ri < model.relations.size() && ok; ++ri) {
            const Relation& r = model.relations[ri];
            ok = allowed[ri][size_t(state[size_t(r.x)] * kStates + state[size_t(r.y)])];
        }
        if (ok) {
            Scenario s;
            s.reserve(size_t(n));
            for (int v = 0; v < n; ++v) s.push_back(state_to_triplet(state[size_t(v)]));
            found.push_back(std::move(s));
        }

        int pos = n - 1;
        while (pos >= 0 && state[size_t(pos)] == kStates - 1) state[size_t(pos--)] = 0;
        if (pos < 0) break;
        ++state[size_t(pos)];
    }
    return make_scenario_set(model.variables, std::move(found), model.name);
}

std::vector<std::vector<int>> variable_groups(const ScenarioSet& set) {
    if (set.scenarios.empty()) throw std::invalid_argument("variable_groups: empty scenario set");
    const int n = int(set.variables.size());

    auto same_column = [&](int a, int b) {
        for (const Scenario& s : set.scenarios)
            if (s[size_t(a)] != s[size_t(b)]) return false;
        return true;
    };

    std::vector<std::vector<int>> blocks;
    std::vector<bool> placed(size_t(n), false);
    for (int v = 0; v < n; ++v) {
        if (placed[size_t(v)]) continue;
        std::vector<int> block{v};
        placed[size_t(v)] = true;
        for (int w = v + 1; w < n; ++w)
            if (!placed[size_t(w)] && same_column(v, w)) {
                block.push_back(w);
                placed[size_t(w)] = true;
            }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

} // namespace trendreason

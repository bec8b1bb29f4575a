// Acceptance suite: end-to-end checks of the case-study reproduction and the
// core solver/graph/reconciliation guarantees. Prints one pass/fail line per
// criterion; exits non-zero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "trendreason/analysis.hpp"
#include "trendreason/correlation.hpp"
#include "trendreason/render.hpp"
#include "test_util.hpp"

using namespace trendreason;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    int number;
    std::string title;
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back(what);
        }
    }

    void expect_under(Clock::duration elapsed, double seconds) {
        const double took = std::chrono::duration<double>(elapsed).count();
        if (took >= seconds) {
            ok = false;
            notes.push_back("took " + std::to_string(took) + "s, limit " + std::to_string(seconds) +
                            "s");
        }
    }
};

void report(const Criterion& c) {
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title
              << '\n';
    for (const auto& note : c.notes) std::cout << "       - " << note << '\n';
    if (!c.ok) ++failures;
}

Triplet tpl(const char* s) { return *triplet_from_string(s); }

int run_cli_exit(const std::string& args) {
    const std::string command = std::string(TRENDREASON_CLI) + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(command.c_str()));
}

std::set<std::set<std::string>> named_groups(const ScenarioSet& set) {
    std::set<std::set<std::string>> out;
    for (const auto& block : variable_groups(set)) {
        std::set<std::string> names;
        for (int v : block) names.insert(set.variables[size_t(v)]);
        out.insert(std::move(names));
    }
    return out;
}

} // namespace

int main() {
    const auto model1 = testutil::load_model_fixture("model1.qtm");
    const auto model2 = testutil::load_model_fixture("model2.qtm");

    // 1. Scenario count, first model: 13 scenarios, one steady state.
    ScenarioSet set1;
    {
        Criterion c{1, "first model solves to 13 scenarios with one steady state"};
        const auto t0 = Clock::now();
        set1 = solve(model1);
        c.expect_under(Clock::now() - t0, 1.0);
        c.expect(set1.scenarios.size() == 13,
                 "got " + std::to_string(set1.scenarios.size()) + " scenarios");
        const auto steady = steady_states(set1);
        c.expect(steady.size() == 1, "expected exactly one steady state");
        if (steady.size() == 1)
            c.expect(set1.scenarios[size_t(steady[0])] == Scenario(10, tpl("+00")),
                     "steady state is not all +00");
        report(c);
    }

    // 2. Scenario count, expert-modified model: 21 scenarios, one steady state.
    ScenarioSet set2;
    {
        Criterion c{2, "expert model solves to 21 scenarios with one steady state"};
        const auto t0 = Clock::now();
        set2 = solve(model2);
        c.expect_under(Clock::now() - t0, 1.0);
        c.expect(set2.scenarios.size() == 21,
                 "got " + std::to_string(set2.scenarios.size()) + " scenarios");
        const auto steady = steady_states(set2);
        c.expect(steady.size() == 1, "expected exactly one steady state");
        report(c);
    }

    // 3. Variable groupings.
    {
        Criterion c{3, "variable groups match the expected partitions"};
        const std::set<std::set<std::string>> want1 = {
            {"GEN", "AGE", "SMA", "EXP"}, {"PRO", "PRI", "HRT", "UNI", "MED"}, {"AGI"}};
        c.expect(named_groups(set1) == want1, "first model grouping differs");
        const std::set<std::set<std::string>> want2 = {
            {"GEN", "SMA", "EXP"}, {"PRI", "HRT", "UNI"}, {"PRO", "MED"}, {"AGE"}, {"AGI"}};
        c.expect(named_groups(set2) == want2, "expert model grouping differs");
        report(c);
    }

    // 4. Transition witnesses.
    ScenarioGraph graph1, graph2;
    {
        Criterion c{4, "stabilisation loop and growth path witnesses exist"};
        const auto t0 = Clock::now();
        graph1 = build_graph(set1);
        graph2 = build_graph(set2);

        const auto loops = stabilisation_loops(graph1, 6);
        const std::vector<std::string> want = {"+00", "+++", "+++", "+++", "++0", "++-", "+00"};
        const bool loop_found =
            std::any_of(loops.begin(), loops.end(), [&](const std::vector<int>& loop) {
                std::vector<std::string> trace;
                for (int idx : loop) trace.push_back(graph1.nodes.scenarios[size_t(idx)][0].to_string());
                return trace == want;
            });
        c.expect(loop_found, "first model: no loop with the +00/+++/+++/+++/++0/++-/+00 GEN trace");

        const auto from = parse_filter(set2.variables, "steady");
        const auto to = parse_filter(set2.variables, "GEN.dx=+,GEN.ddx=+,AGI.ddx=-");
        const auto path = path_query(graph2, from, to);
        c.expect(path.size() == 4, "expert model: expected a 3-arc path from the steady state");
        if (path.size() == 4) {
            c.expect(is_steady(graph2.nodes.scenarios[size_t(path[0])]),
                     "path does not start at the steady state");
            for (size_t i = 1; i < path.size(); ++i)
                c.expect(graph2.nodes.scenarios[size_t(path[i])][0] == tpl("+++"),
                         "GEN is not +++ along the path");
        }
        c.expect_under(Clock::now() - t0, 5.0);
        report(c);
    }

    // 5. Stability.
    {
        Criterion c{5, "both graphs are stable; every expert-model scenario joins a loop"};
        c.expect(is_stable(graph1), "first model graph is not stable");
        c.expect(is_stable(graph2), "expert model graph is not stable");

        const auto steady = steady_states(set2);
        const int s = steady.at(0);
        const auto out = graph2.out_adjacency();
        const auto in = graph2.in_adjacency();
        // forward/backward reachability from the steady node
        auto bfs = [&](const std::vector<std::vector<int>>& adj) {
            std::vector<bool> seen(out.size(), false);
            std::vector<int> stack{s};
            seen[size_t(s)] = true;
            while (!stack.empty()) {
                const int node = stack.back();
                stack.pop_back();
                for (int next : adj[size_t(node)])
                    if (!seen[size_t(next)]) {
                        seen[size_t(next)] = true;
                        stack.push_back(next);
                    }
            }
            return seen;
        };
        const auto forward = bfs(out);
        const auto backward = bfs(in);
        for (size_t node = 0; node < out.size(); ++node)
            c.expect(forward[node] && backward[node],
                     "scenario " + std::to_string(node + 1) + " is on no steady-state round trip");
        report(c);
    }

    // 6. Oracle equivalence on random models.
    {
        Criterion c{6, "solver matches the brute-force oracle on 200 random models"};
        const auto t0 = Clock::now();
        std::mt19937 rng(20250808);
        for (int i = 0; i < 200; ++i) {
            const auto m = testutil::random_model(rng, 5, 6);
            if (!(solve(m) == solve_bruteforce(m, {}, 6))) {
                c.expect(false, "mismatch on random model " + std::to_string(i) + ": " +
                                    serialize_model(m));
                break;
            }
        }
        c.expect_under(Clock::now() - t0, 60.0);
        report(c);
    }

    // 7. Sign algebra and transition table.
    {
        Criterion c{7, "sign algebra laws hold and the 1-D transition table is exact"};
        const Sign all[] = {Sign::Plus, Sign::Zero, Sign::Minus};
        for (Sign a : all) {
            c.expect(qmul(a, Sign::Zero) == Sign::Zero, "zero does not absorb");
            c.expect(qsq(a) == qmul(a, a), "square's law fails");
            c.expect(qneg(qneg(a)) == a, "negation is not an involution");
            c.expect(qsum(a, Sign::Zero) == SignSet{a}, "zero is not the qsum identity");
            for (Sign b : all) {
                c.expect(qmul(a, b) == qmul(b, a), "qmul not commutative");
                c.expect(qsum(a, b) == qsum(b, a), "qsum not commutative");
                c.expect(!qsum(a, b).empty(), "qsum produced an empty set");
                for (Sign d : all)
                    c.expect(qmul(qmul(a, b), d) == qmul(a, qmul(b, d)), "qmul not associative");
            }
        }

        const TransitionTable table;
        const std::map<std::string, std::set<std::string>> expected = {
            {"+++", {"++0"}},
            {"++0", {"+++", "++-"}},
            {"++-", {"++0", "+0-", "+00"}},
            {"+0+", {"+++"}},
            {"+00", {"+++", "+--"}},
            {"+0-", {"+--"}},
            {"+-+", {"+-0", "+0+", "+00"}},
            {"+-0", {"+-+", "+--"}},
            {"+--", {"+-0"}},
        };
        for (const auto& [from, want] : expected) {
            std::set<std::string> got;
            for (const Triplet& t : table.successors(tpl(from.c_str()))) got.insert(t.to_string());
            c.expect(got == want, "successors of " + from + " differ");
        }
        // the two steady-derivative source rows pinned exactly
        c.expect(expected.at("+00") == std::set<std::string>{"+++", "+--"}, "+00 row differs");
        c.expect(expected.at("+0-") == std::set<std::string>{"+--"}, "+0- row differs");
        report(c);
    }

    // 8. Reconciliation.
    {
        Criterion c{8, "core/envelope bracket every input and match the frozen goldens"};
        std::mt19937 rng(7);
        const std::vector<std::string> vars = {"A", "B", "C"};
        for (int round = 0; round < 50; ++round) {
            std::vector<ScenarioSet> family;
            std::uniform_int_distribution<int> count(1, 4);
            for (int i = count(rng); i > 0; --i)
                family.push_back(testutil::random_scenario_set(rng, vars, 12));
            const auto cor = core(family);
            const auto env = envelope(family);
            for (const auto& s : family) {
                c.expect(std::includes(s.scenarios.begin(), s.scenarios.end(),
                                       cor.scenarios.begin(), cor.scenarios.end()),
                         "core not contained in an input");
                c.expect(std::includes(env.scenarios.begin(), env.scenarios.end(),
                                       s.scenarios.begin(), s.scenarios.end()),
                         "an input not contained in the envelope");
            }
            if (!c.ok) break;
        }

        const ScenarioSet both[] = {set1, set2};
        c.expect(render_csv(core(both)) ==
                     testutil::read_file(testutil::golden_path("core_scenarios.csv")),
                 "case-study core differs from the golden file");
        c.expect(render_csv(envelope(both)) ==
                     testutil::read_file(testutil::golden_path("envelope_scenarios.csv")),
                 "case-study envelope differs from the golden file");
        report(c);
    }

    // 9. Removal heuristic on the sign-inconsistent triangle.
    {
        Criterion c{9, "removal heuristic repairs the inconsistent triangle"};
        const auto t0 = Clock::now();
        const auto matrix =
            parse_correlation_csv(testutil::read_file(testutil::data_path("triangle3.csv")));
        const auto initial = solve(matrix_to_model(matrix));
        c.expect(is_degenerate(initial), "triangle model is not degenerate initially");

        const auto trace = removal_heuristic(matrix);
        c.expect(!trace.exhausted, "heuristic exhausted the matrix");
        c.expect(!is_degenerate(trace.final_scenarios), "final model still degenerate");
        for (size_t k = 1; k < trace.removals.size(); ++k)
            c.expect(std::abs(trace.removals[k - 1].value) <= std::abs(trace.removals[k].value),
                     "removal order not ascending in |c|");
        c.expect(!trace.removals.empty() && trace.removals[0].i == 0 && trace.removals[0].j == 1,
                 "tie not broken toward the lexicographically smallest pair");
        c.expect_under(Clock::now() - t0, 1.0);
        report(c);
    }

    // 10. The flagship trend query is impossible in both models; CLI signals 1.
    {
        Criterion c{10, "exports-up/innovation-down/gender-constant query is empty"};
        const auto filter1 = parse_filter(set1.variables, "EXP.dx=+,PRI.dx=-,HRT.dx=-,GEN.dx=0");
        c.expect(query(set1, filter1).empty(), "first model admits the query");
        const auto filter2 = parse_filter(set2.variables, "EXP.dx=+,PRI.dx=-,HRT.dx=-,GEN.dx=0");
        c.expect(query(set2, filter2).empty(), "expert model admits the query");

        const std::string where = " --where \"EXP.dx=+,PRI.dx=-,HRT.dx=-,GEN.dx=0\"";
        c.expect(run_cli_exit("query " + testutil::data_path("model1.qtm") + where) == 1,
                 "CLI exit code is not 1 for the first model");
        c.expect(run_cli_exit("query " + testutil::data_path("model2.qtm") + where) == 1,
                 "CLI exit code is not 1 for the expert model");
        report(c);
    }

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}

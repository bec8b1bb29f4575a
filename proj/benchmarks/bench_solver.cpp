#include <benchmark/benchmark.h>

#include "trendreason/analysis.hpp"
#include "trendreason/solver.hpp"
#include "trendreason/transitions.hpp"
#include "test_util.hpp"

using namespace trendreason;

static void BM_SolveFirstModel(benchmark::State& state) {
    const auto model = testutil::load_model_fixture("model1.qtm");
    for (auto _ : state) {
        auto set = solve(model);
        benchmark::DoNotOptimize(set);
    }
}
BENCHMARK(BM_SolveFirstModel);

static void BM_SolveExpertModel(benchmark::State& state) {
    const auto model = testutil::load_model_fixture("model2.qtm");
    for (auto _ : state) {
        auto set = solve(model);
        benchmark::DoNotOptimize(set);
    }
}
BENCHMARK(BM_SolveExpertModel);

static void BM_BruteForceFiveVars(benchmark::State& state) {
    const auto model =
        parse_model("VARS A B C D E\nCXI A B\nDP B C\nIP C D\nCVD D E\nLNI A E\n");
    for (auto _ : state) {
        auto set = solve_bruteforce(model, {}, 6);
        benchmark::DoNotOptimize(set);
    }
}
BENCHMARK(BM_BruteForceFiveVars);

static void BM_BuildGraphExpertModel(benchmark::State& state) {
    const auto set = solve(testutil::load_model_fixture("model2.qtm"));
    for (auto _ : state) {
        auto graph = build_graph(set);
        benchmark::DoNotOptimize(graph);
    }
}
BENCHMARK(BM_BuildGraphExpertModel);

static void BM_StabilisationLoops(benchmark::State& state) {
    const auto graph = build_graph(solve(testutil::load_model_fixture("model2.qtm")));
    for (auto _ : state) {
        auto loops = stabilisation_loops(graph, int(state.range(0)));
        benchmark::DoNotOptimize(loops);
    }
}
BENCHMARK(BM_StabilisationLoops)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();

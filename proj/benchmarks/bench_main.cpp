// Microbenchmarks for the expensive paths: enumeration, exact transversals,
// the ladder refinement pipeline, and the arc cascade.
#include <benchmark/benchmark.h>

#include "trav/arcs.hpp"
#include "trav/budget.hpp"
#include "trav/generate.hpp"
#include "trav/longest.hpp"
#include "trav/rational.hpp"
#include "trav/separator.hpp"
#include "trav/transversal.hpp"
#include "trav/weave.hpp"

namespace {

using namespace trav;

void BM_LongestPaths(benchmark::State& state) {
    int n = (int)state.range(0);
    Graph g = randomConnected(n, Rational(3, 10), 91);
    for (auto _ : state) {
        ExpansionBudget budget;
        benchmark::DoNotOptimize(longestPaths(g, budget));
    }
}
BENCHMARK(BM_LongestPaths)->Arg(8)->Arg(11)->Arg(14);

void BM_LongestCycles(benchmark::State& state) {
    int n = (int)state.range(0);
    Graph g = randomTwoConnected(n, Rational(3, 10), 92);
    for (auto _ : state) {
        ExpansionBudget budget;
        benchmark::DoNotOptimize(longestCycles(g, budget));
    }
}
BENCHMARK(BM_LongestCycles)->Arg(8)->Arg(11)->Arg(14);

void BM_ExactLpt(benchmark::State& state) {
    int n = (int)state.range(0);
    Graph g = randomConnected(n, Rational(3, 10), 93);
    for (auto _ : state) {
        ExpansionBudget budget;
        benchmark::DoNotOptimize(exactLpt(g, budget));
    }
}
BENCHMARK(BM_ExactLpt)->Arg(8)->Arg(11)->Arg(14);

void BM_ExactLct(benchmark::State& state) {
    int n = (int)state.range(0);
    Graph g = randomTwoConnected(n, Rational(3, 10), 94);
    for (auto _ : state) {
        ExpansionBudget budget;
        benchmark::DoNotOptimize(exactLct(g, budget));
    }
}
BENCHMARK(BM_ExactLct)->Arg(8)->Arg(11)->Arg(14);

void BM_SeparatorTransversal(benchmark::State& state) {
    int n = (int)state.range(0);
    Graph g = randomConnected(n, Rational(3, 10), 95);
    for (auto _ : state) {
        ExpansionBudget budget;
        benchmark::DoNotOptimize(separatorTransversal(g, Rational(2, 3), budget));
    }
}
BENCHMARK(BM_SeparatorTransversal)->Arg(8)->Arg(11)->Arg(14);

void BM_RefinePipeline(benchmark::State& state) {
    int tau = (int)state.range(0);
    auto inst = randomLadderInstance(tau, 8, tau / 2, 96);
    for (auto _ : state) benchmark::DoNotOptimize(refinePipeline(inst, 8));
}
BENCHMARK(BM_RefinePipeline)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Weave(benchmark::State& state) {
    int tau = (int)state.range(0);
    auto bm = randomBlockMatching(tau, 97);
    for (auto _ : state) benchmark::DoNotOptimize(weave(bm));
}
BENCHMARK(BM_Weave)->Arg(30)->Arg(100)->Arg(300);

void BM_ArcCascade(benchmark::State& state) {
    int m = (int)state.range(0);
    auto model = randomArcModel(m, 98);
    for (auto _ : state) {
        ExpansionBudget budget;
        benchmark::DoNotOptimize(theorem6Transversal(model, TransversalMode::path, budget));
    }
}
BENCHMARK(BM_ArcCascade)->Arg(5)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();

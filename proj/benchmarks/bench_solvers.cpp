#include <benchmark/benchmark.h>

#include "widthlab/bounds.hpp"
#include "widthlab/canonical.hpp"
#include "widthlab/coloring_game.hpp"
#include "widthlab/consistency.hpp"
#include "widthlab/generators.hpp"
#include "widthlab/invariants.hpp"

using namespace widthlab;

namespace {

Graph k(int n) { return standard_graph("complete", n); }

void BM_KConsistencyK6(benchmark::State &state) {
    Graph g = k(6), h = k(3);
    int cap = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(k_consistent(g, h, cap).duplicator_wins);
}
BENCHMARK(BM_KConsistencyK6)->Arg(3)->Arg(4)->Arg(5);

void BM_WidthWheel(benchmark::State &state) {
    Graph g = standard_graph("wheel", 6), h = k(3);
    for (auto _ : state) benchmark::DoNotOptimize(width(g, h).width);
}
BENCHMARK(BM_WidthWheel);

void BM_GameSolveGrotzsch(benchmark::State &state) {
    Graph g = standard_graph("grotzsch");
    int cap = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GameSolver solver(g, cap);
        solver.run_to_stable();
        benchmark::DoNotOptimize(solver.rounds_to_win(0));
    }
}
BENCHMARK(BM_GameSolveGrotzsch)->Arg(4)->Arg(5);

void BM_CanonicalPetersen(benchmark::State &state) {
    Graph g = standard_graph("petersen");
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).bytes.size());
}
BENCHMARK(BM_CanonicalPetersen);

void BM_TreewidthGrotzsch(benchmark::State &state) {
    Graph g = standard_graph("grotzsch");
    for (auto _ : state) benchmark::DoNotOptimize(treewidth_exact(g));
}
BENCHMARK(BM_TreewidthGrotzsch);

void BM_CountColoringsTripleCover(benchmark::State &state) {
    Graph a = triple_cover(k(4)).graph;
    for (auto _ : state) benchmark::DoNotOptimize(count_proper_colorings(a, 3));
}
BENCHMARK(BM_CountColoringsTripleCover);

void BM_SurveyW5(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(survey_Wn(5).width);
}
BENCHMARK(BM_SurveyW5);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <vector>

#include "vc4/branching.hpp"
#include "vc4/crown.hpp"
#include "vc4/harness/generator.hpp"
#include "vc4/oracle.hpp"
#include "vc4/solver.hpp"

using namespace vc4;
using harness::Profile;

namespace {

// Decide at the minimum cover size, the hardest yes-instance for a given graph.
void BM_DecideAtOptimum(benchmark::State &state, Profile profile) {
    int n = static_cast<int>(state.range(0));
    if (profile == Profile::Regular3)
        n += n % 2;
    Graph g = harness::gen_bounded_degree(n, 17, profile);
    int k = oracle::min_vc_exact(g).size;
    for (auto _ : state)
        benchmark::DoNotOptimize(vc_decide(g, k, true));
    state.SetLabel(std::string(harness::to_string(profile)) + " k=" + std::to_string(k));
}

void BM_DecideBelowOptimum(benchmark::State &state) {
    Graph g = harness::gen_bounded_degree(static_cast<int>(state.range(0)), 17, Profile::Mixed34);
    int k = oracle::min_vc_exact(g).size - 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(vc_decide(g, k));
}

void BM_Oracle(benchmark::State &state) {
    Graph g = harness::gen_bounded_degree(static_cast<int>(state.range(0)), 17, Profile::Mixed34);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::min_vc_exact(g));
}

void BM_BranchingNumber(benchmark::State &state) {
    std::vector<double> v{5.0 / 3, 3, 7.0 / 3};
    for (auto _ : state)
        benchmark::DoNotOptimize(branching_number(v));
}

void BM_Matching(benchmark::State &state) {
    int side = static_cast<int>(state.range(0));
    Graph g(static_cast<std::size_t>(2 * side));
    VertexSet c, h;
    for (int i = 0; i < side; ++i) {
        c.push_back(i);
        h.push_back(side + i);
    }
    for (int i = 0; i < side; ++i)
        for (int d : {0, 1, 3})
            if (!g.adjacent(i, side + (i + d) % side))
                g.add_edge(i, side + (i + d) % side);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_bipartite_matching(g, c, h));
}

}  // namespace

BENCHMARK_CAPTURE(BM_DecideAtOptimum, mixed34, Profile::Mixed34)->DenseRange(12, 24, 6);
BENCHMARK_CAPTURE(BM_DecideAtOptimum, regular3, Profile::Regular3)->DenseRange(12, 24, 6);
BENCHMARK_CAPTURE(BM_DecideAtOptimum, regular4, Profile::Regular4)->DenseRange(12, 24, 6);
BENCHMARK(BM_DecideBelowOptimum)->DenseRange(12, 24, 6);
BENCHMARK(BM_Oracle)->DenseRange(12, 24, 6);
BENCHMARK(BM_BranchingNumber);
BENCHMARK(BM_Matching)->Range(8, 256);

BENCHMARK_MAIN();

// Micro benchmarks for the hot paths: sparse intersection counting, a full
// polishing pass, and maximal-clique extraction.

#include <benchmark/benchmark.h>

#include <cmath>

#include "micropolish/cliques.hpp"
#include "micropolish/instances.hpp"
#include "micropolish/polishing.hpp"
#include "micropolish/similarity.hpp"

using namespace micropolish;

namespace {

Graph zipf(VertexId n, std::uint64_t seed = 1) {
    return gen_zipf_graph({n, std::sqrt(static_cast<double>(n)), 1.0, 2.0, seed});
}

void BM_NeighborIntersections(benchmark::State& state) {
    auto g = zipf(static_cast<VertexId>(state.range(0)));
    IntersectionStats stats;
    for (auto _ : state) {
        auto pairs = neighbor_intersections(g, 2, 1, &stats);
        benchmark::DoNotOptimize(pairs);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(stats.inner_steps));
}
BENCHMARK(BM_NeighborIntersections)->Arg(10000)->Arg(30000)->Arg(100000);

void BM_NeighborIntersectionsThreads(benchmark::State& state) {
    auto g = zipf(30000);
    auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto pairs = neighbor_intersections(g, 2, threads);
        benchmark::DoNotOptimize(pairs);
    }
}
BENCHMARK(BM_NeighborIntersectionsThreads)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_PolishStep(benchmark::State& state) {
    auto inst = gen_planted({static_cast<VertexId>(state.range(0)),
                             static_cast<std::uint32_t>(state.range(0) / 50), 30, 1, 0.5, 3});
    auto m = SimilarityMeasure::jaccard(0.15);
    for (auto _ : state) {
        auto g = polish_step(inst.graph, m);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_PolishStep)->Arg(2000)->Arg(5000)->Arg(10000);

void BM_PolishToFixpoint(benchmark::State& state) {
    auto inst = gen_planted({5000, 100, 30, 1, 0.5, 3});
    auto m = SimilarityMeasure::jaccard(0.15);
    for (auto _ : state) {
        auto [g, rep] = polish(inst.graph, m, 30);
        benchmark::DoNotOptimize(g);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_PolishToFixpoint);

void BM_EnumerateCliques(benchmark::State& state) {
    auto inst = gen_planted({5000, 100, 30, 1, 0.5, 3});
    auto [g, rep] = polish(inst.graph, SimilarityMeasure::jaccard(0.15), 30);
    for (auto _ : state) {
        auto cliques = enumerate_maximal_cliques(g, 3);
        benchmark::DoNotOptimize(cliques);
    }
}
BENCHMARK(BM_EnumerateCliques);

}  // namespace

BENCHMARK_MAIN();

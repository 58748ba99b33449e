#include <benchmark/benchmark.h>

#include "grayud/configuration.hpp"
#include "grayud/embedding.hpp"
#include "grayud/graph.hpp"
#include "grayud/isomorphism.hpp"

using namespace grayud;

static void BM_GrayGraph(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gray_graph());
}
BENCHMARK(BM_GrayGraph);

static void BM_Girth(benchmark::State& state) {
    const Graph g = gray_graph();
    for (auto _ : state) benchmark::DoNotOptimize(girth(g));
}
BENCHMARK(BM_Girth);

static void BM_FindIsomorphism(benchmark::State& state) {
    const Graph g = gray_graph();
    const Graph h = levi_graph(grid3_configuration(3));
    for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(g, h));
}
BENCHMARK(BM_FindIsomorphism);

static void BM_AutomorphismCount(benchmark::State& state) {
    const Graph g = gray_graph();
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_count(g));
}
BENCHMARK(BM_AutomorphismCount);

static void BM_Assemble(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(assemble({0.6, 0.3}));
}
BENCHMARK(BM_Assemble);

static void BM_Validate(benchmark::State& state) {
    const Embedding e = assemble({0.6, 0.3});
    for (auto _ : state) benchmark::DoNotOptimize(validate(e));
}
BENCHMARK(BM_Validate);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "forestlab/forest_model.hpp"
#include "forestlab/graph.hpp"
#include "forestlab/identities.hpp"
#include "forestlab/prufer.hpp"

using namespace forestlab;

namespace {

void BM_EnumerateForests(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        enumerate_forests(n, [&](const Forest&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateForests)->Arg(5)->Arg(6)->Arg(7);

void BM_MassDistribution(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const WeightVector w = WeightVector::unit(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mass_distribution(w));
    }
}
BENCHMARK(BM_MassDistribution)->Arg(5)->Arg(6)->Arg(7);

void BM_SampleTrees(benchmark::State& state) {
    const WeightVector w({3, 2, 2, 1, 1, 1});
    TreeSampler sampler(w);
    SplitMix64 rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.sample(rng));
    }
}
BENCHMARK(BM_SampleTrees);

void BM_SampleHistogram(benchmark::State& state) {
    const WeightVector w({3, 2, 2, 1, 1, 1});
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_code_histogram(w, 7, 1 << 18, threads));
    }
}
BENCHMARK(BM_SampleHistogram)->Arg(1)->Arg(4);

void BM_FindBridges(benchmark::State& state) {
    // two cliques joined by a bridge: half the edges, one bridge
    const int n = 32;
    std::vector<Edge> edges;
    for (int a = 1; a <= n / 2; ++a)
        for (int b = a + 1; b <= n / 2; ++b) {
            edges.push_back({a, b});
            edges.push_back({a + n / 2, b + n / 2});
        }
    edges.push_back({n / 2, n / 2 + 1});
    const LabelledGraph g(n, edges);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_bridges(g));
    }
}
BENCHMARK(BM_FindBridges);

void BM_VerifyMassFlow(benchmark::State& state) {
    const WeightVector w({2, 2, 1, 1, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_mass_flow(w, 2));
    }
}
BENCHMARK(BM_VerifyMassFlow);

}  // namespace

BENCHMARK_MAIN();

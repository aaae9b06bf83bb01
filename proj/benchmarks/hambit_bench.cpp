#include <benchmark/benchmark.h>

#include "hambit/search.hpp"

namespace {

using namespace hambit;

SignedPair golden_h64() {
    const LinearCode code = extended_perfect_code(4);
    const Field field(4);
    const Vertex v = Vertex::unit(code.params, 1, 1);
    return difference_pair(code.words, translate(code.words, v, field));
}

void BM_AdjacencyApply_H64(benchmark::State& state) {
    const Space s((Params(6, 4)));
    const IntFunction f = characteristic_function(s, golden_h64());
    for (auto _ : state) benchmark::DoNotOptimize(adjacency_apply(s, f));
}
BENCHMARK(BM_AdjacencyApply_H64);

void BM_CheckCylinder_H64(benchmark::State& state) {
    const Params p(6, 4);
    const SignedPair pair = golden_h64();
    for (auto _ : state) benchmark::DoNotOptimize(check_cylinder(p, pair));
}
BENCHMARK(BM_CheckCylinder_H64);

void BM_CheckWeight_H64(benchmark::State& state) {
    const Params p(6, 4);
    const SignedPair pair = golden_h64();
    for (auto _ : state) benchmark::DoNotOptimize(check_weight(p, pair));
}
BENCHMARK(BM_CheckWeight_H64);

void BM_CheckAll_H64(benchmark::State& state) {
    const Params p(6, 4);
    const SignedPair pair = golden_h64();
    for (auto _ : state) benchmark::DoNotOptimize(check_all(p, pair));
}
BENCHMARK(BM_CheckAll_H64);

void BM_BruteForce_H23(benchmark::State& state) {
    const Params p(2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_enumerate(p));
}
BENCHMARK(BM_BruteForce_H23);

void BM_MinDistance_H64Code(benchmark::State& state) {
    const LinearCode code = extended_perfect_code(4);
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(code.words));
}
BENCHMARK(BM_MinDistance_H64Code);

}  // namespace

BENCHMARK_MAIN();

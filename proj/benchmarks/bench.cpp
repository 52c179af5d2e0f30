#include <benchmark/benchmark.h>

#include "coarr/constructions.hpp"
#include "coarr/metrics.hpp"
#include "coarr/optimize.hpp"

namespace {

using namespace coarr;

void BM_SumCoarray(benchmark::State& state) {
    const SensorArray d = ka_r_grid(state.range(0)).array;
    for (auto _ : state) benchmark::DoNotOptimize(sum_coarray(d));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SumCoarray)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_KaGrid(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ka_r_grid(state.range(0)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KaGrid)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_CnaOpt(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cna_opt(state.range(0)));
}
BENCHMARK(BM_CnaOpt)->Arg(50)->Arg(500);

void BM_MraRestricted(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(mra_search(state.range(0), true));
}
BENCHMARK(BM_MraRestricted)->DenseRange(5, 8);

void BM_Metrics(benchmark::State& state) {
    const SensorArray d = ka_r_grid(state.range(0)).array;
    for (auto _ : state) benchmark::DoNotOptimize(metrics(d));
}
BENCHMARK(BM_Metrics)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();

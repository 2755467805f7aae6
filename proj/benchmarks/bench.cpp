#include <benchmark/benchmark.h>

#include "jacobstree/census.hpp"
#include "jacobstree/collatz.hpp"
#include "jacobstree/cycles.hpp"
#include "jacobstree/knumbers.hpp"
#include "jacobstree/tree.hpp"

using namespace jacobstree;

static void BM_k_sequence_60(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(k_sequence(1, Sign::minus, 60));
}
BENCHMARK(BM_k_sequence_60);

static void BM_trajectory_27(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(trajectory(27, Variant::plus));
}
BENCHMARK(BM_trajectory_27);

static void BM_odd_table_147(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(odd_table(147, Variant::plus));
}
BENCHMARK(BM_odd_table_147);

static void BM_build_tree_2000(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(build_tree(Variant::plus, 1, 16, 2000));
}
BENCHMARK(BM_build_tree_2000);

static void BM_enumerate_7_11(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            enumerate_integer_cycles(Variant::minus, 7, 11));
}
BENCHMARK(BM_enumerate_7_11);

static void BM_sweep_10k(benchmark::State& state) {
    for (auto _ : state) {
        CensusReport r = sweep(1, 10000, Variant::minus,
                               static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_sweep_10k)->Arg(1)->Arg(8);

static void BM_classify_27(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(27, Variant::plus));
}
BENCHMARK(BM_classify_27);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "balgf/chebyshev.hpp"
#include "balgf/lattice.hpp"
#include "balgf/oracle.hpp"
#include "balgf/transfer.hpp"

using namespace balgf;

static void BM_SeriesExpand(benchmark::State& state) {
    const RatFunc g = g_balanced(8);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series_expand(g, n));
}
BENCHMARK(BM_SeriesExpand)->Arg(64)->Arg(256)->Arg(1024);

static void BM_DirectSolve(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(s_sum_direct(k));
}
BENCHMARK(BM_DirectSolve)->DenseRange(4, 12, 4);

static void BM_ClosedForm(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(f_balanced(k));
}
BENCHMARK(BM_ClosedForm)->DenseRange(4, 12, 4);

static void BM_LatticeRoute(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(g_balanced(k));
}
BENCHMARK(BM_LatticeRoute)->DenseRange(4, 12, 4);

static void BM_CountStrings(benchmark::State& state) {
    OracleOptions opts;
    opts.workers = static_cast<unsigned>(state.range(1));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_balanced_strings(4, n, opts));
}
BENCHMARK(BM_CountStrings)->Args({16, 1})->Args({16, 4})->Args({20, 4})->Unit(benchmark::kMillisecond);

static void BM_CountPathsDp(benchmark::State& state) {
    const PathSpec spec = make_path_spec(-8, 8, Terminal::any);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_paths(spec, n));
}
BENCHMARK(BM_CountPathsDp)->Arg(64)->Arg(512);

static void BM_CountExtentDp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_extent_paths(8, n));
}
BENCHMARK(BM_CountExtentDp)->Arg(64)->Arg(512);

BENCHMARK_MAIN();

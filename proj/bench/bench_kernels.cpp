#include "nilblob/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace nb;

static void table(benchmark::State& st, Exec exec) {
    int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(build_table(n, Rule::nilblob(), exec));
}

static void assoc(benchmark::State& st, Exec exec) {
    auto t = build_table(static_cast<int>(st.range(0)), Rule::nilblob(), Exec::Parallel);
    for (auto _ : st) benchmark::DoNotOptimize(check_associativity(t, exec));
}

BENCHMARK_CAPTURE(table, serial, Exec::Serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(table, parallel, Exec::Parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(assoc, serial, Exec::Serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(assoc, parallel, Exec::Parallel)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

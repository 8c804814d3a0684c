// Serial reference vs OpenMP kernels for the replay and per-copy checks.

#include <clab/gadget.hpp>
#include <clab/verifier.hpp>

#include <benchmark/benchmark.h>

using namespace clab;

static void replay_serial_kernel(benchmark::State & state)
{
    auto gi = build_G(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(replay_serial(gi, 0));
    state.counters["branches"] = static_cast<double>(replay_branch_count(gi.params.m));
}

static void replay_parallel_kernel(benchmark::State & state)
{
    auto gi = build_G(static_cast<unsigned>(state.range(0)));
    auto threads = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(replay_parallel(gi, 0, threads));
    state.counters["branches"] = static_cast<double>(replay_branch_count(gi.params.m));
}

static void theorem_copies(benchmark::State & state)
{
    TheoremOptions opts;
    opts.threads = static_cast<int>(state.range(1));
    auto m = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorem(m, opts));
}

BENCHMARK(replay_serial_kernel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(replay_parallel_kernel)->Args({4, 2})->Args({4, 4})->Args({5, 2})->Args({5, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(theorem_copies)->Args({2, 1})->Args({2, 4})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

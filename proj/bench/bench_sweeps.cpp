// Serial reference vs OpenMP sweeps.

#include "pcpctl/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace pcpctl;

static void BM_RhoSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::rho_sweep_serial(state.range(0)));
}
static void BM_RhoParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::rho_sweep_parallel(state.range(0)));
}
BENCHMARK(BM_RhoSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RhoParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_StackSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::stack_sweep_serial(state.range(0), Flavor::probabilistic, true));
    }
}
static void BM_StackParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::stack_sweep_parallel(state.range(0), Flavor::probabilistic, true));
    }
}
BENCHMARK(BM_StackSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StackParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static const PcpInstance& two_pairs() {
    static const PcpInstance inst(std::vector<PcpInstance::Pair>{{"A", "AB"}, {"BA", "A"}});
    return inst;
}

static void BM_WitnessSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::witness_sweep_serial(two_pairs(), state.range(0), Flavor::quantum));
    }
}
static void BM_WitnessParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::witness_sweep_parallel(two_pairs(), state.range(0), Flavor::quantum));
    }
}
BENCHMARK(BM_WitnessSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SolveSerial(benchmark::State& state) {
    PcpInstance hard(std::vector<PcpInstance::Pair>{{"AAB", "A"}, {"B", "ABA"}, {"A", "B"}});
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_solve(hard, state.range(0)));
}
static void BM_SolveParallel(benchmark::State& state) {
    PcpInstance hard(std::vector<PcpInstance::Pair>{{"AAB", "A"}, {"B", "ABA"}, {"A", "B"}});
    for (auto _ : state) benchmark::DoNotOptimize(kernels::brute_force_solve_parallel(hard, state.range(0)));
}
BENCHMARK(BM_SolveSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

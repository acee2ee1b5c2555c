// Compares the OpenMP pair-parallel PCC checker against the serial
// reference, and batch decomposition serial vs parallel across instances.
#include <benchmark/benchmark.h>

#include "zzmod/decomposer.hpp"
#include "zzmod/generator.hpp"

using namespace zzmod;

namespace {

ZigzagShape bench_shape(int n) {
    std::vector<Direction> dirs;
    for (int i = 0; i + 1 < n; ++i)
        dirs.push_back(i % 2 ? Direction::Backward : Direction::Forward);
    return ZigzagShape(std::move(dirs));
}

PersModule bench_module(int n, int bars) {
    return gen_decomposable(7, bench_shape(n), bars, 2, 4).module;
}

std::vector<PersModule> bench_batch(int n, int count) {
    std::vector<PersModule> ms;
    for (int i = 0; i < count; ++i)
        ms.push_back(gen_decomposable(100 + static_cast<std::uint64_t>(i), bench_shape(n),
                                      6, 2, 3)
                         .module);
    return ms;
}

void BM_check_all_serial(benchmark::State& state) {
    PersModule m = bench_module(static_cast<int>(state.range(0)), 8);
    for (auto _ : state) {
        PccReport rep = check_all_serial(m);
        benchmark::DoNotOptimize(rep.overall);
    }
}

void BM_check_all_omp(benchmark::State& state) {
    PersModule m = bench_module(static_cast<int>(state.range(0)), 8);
    for (auto _ : state) {
        PccReport rep = check_all(m);
        benchmark::DoNotOptimize(rep.overall);
    }
}

void BM_batch_decompose_serial(benchmark::State& state) {
    auto ms = bench_batch(static_cast<int>(state.range(0)), 16);
    for (auto _ : state) {
        std::size_t bars = 0;
        for (const PersModule& m : ms) bars += decompose(m).barcode->bars.size();
        benchmark::DoNotOptimize(bars);
    }
}

void BM_batch_decompose_omp(benchmark::State& state) {
    auto ms = bench_batch(static_cast<int>(state.range(0)), 16);
    for (auto _ : state) {
        std::size_t bars = 0;
#pragma omp parallel for reduction(+ : bars) schedule(dynamic)
        for (std::size_t i = 0; i < ms.size(); ++i)
            bars += decompose(ms[i]).barcode->bars.size();
        benchmark::DoNotOptimize(bars);
    }
}

} // namespace

BENCHMARK(BM_check_all_serial)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_check_all_omp)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_batch_decompose_serial)->Arg(6)->Arg(10);
BENCHMARK(BM_batch_decompose_omp)->Arg(6)->Arg(10);

BENCHMARK_MAIN();

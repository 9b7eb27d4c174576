#include <benchmark/benchmark.h>

#include <random>

#include "mixsym/barquot.hpp"
#include "mixsym/mixed.hpp"
#include "mixsym/schur.hpp"

using namespace mixsym;

static void BM_RectSchur(benchmark::State& state) {
    const int rows = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rect_schur(rows, rows));
}
BENCHMARK(BM_RectSchur)->DenseRange(2, 5);

static void BM_SchurQ(benchmark::State& state) {
    std::vector<int> parts;
    for (int k = static_cast<int>(state.range(0)); k > 0; --k) parts.push_back(2 * k - 1);
    const StrictPartition lambda(parts);
    for (auto _ : state) benchmark::DoNotOptimize(schur_q(lambda));
}
BENCHMARK(BM_SchurQ)->DenseRange(1, 4);

static void BM_Verify(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(ExpansionCase::one, m, m));
        benchmark::DoNotOptimize(verify(ExpansionCase::zero, m, m));
    }
}
BENCHMARK(BM_Verify)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_QuotientRoundTrip(benchmark::State& state) {
    std::mt19937 rng(3);
    std::vector<StrictPartition> inputs;
    for (int k = 0; k < 64; ++k) {
        std::vector<int> parts;
        for (int p = 40; p > 0; --p)
            if (rng() % 3 == 0) parts.push_back(p);
        inputs.emplace_back(parts);
    }
    for (auto _ : state)
        for (const auto& lambda : inputs) benchmark::DoNotOptimize(inverse_quotient(quotient(lambda)));
}
BENCHMARK(BM_QuotientRoundTrip);

BENCHMARK_MAIN();

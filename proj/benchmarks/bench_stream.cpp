#include <benchmark/benchmark.h>

#include <random>

#include "approxrs/stream_binary.hpp"
#include "approxrs/stream_integer.hpp"

using namespace approxrs;

static void BM_BinaryWindowPush(benchmark::State& state) {
    BinaryWindow w(state.range(0));
    uint64_t k = 0;
    for (auto _ : state) w.push(++k & 1);
}
BENCHMARK(BM_BinaryWindowPush)->Range(1 << 12, 1 << 24);

static void BM_BinaryWindowSs(benchmark::State& state) {
    uint64_t n = state.range(0);
    BinaryWindow w(n);
    std::mt19937_64 rng(3);
    for (uint64_t i = 0; i < 2 * n; ++i) w.push(rng() & 1);
    uint64_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(w.ss(i));
        i = i * 2862933555777941757ull % n + 1;
    }
}
BENCHMARK(BM_BinaryWindowSs)->Range(1 << 12, 1 << 24);

static void BM_ApproxWindowPush(benchmark::State& state) {
    BinaryWindowApprox w(state.range(0), 64);
    uint64_t k = 0;
    for (auto _ : state) w.push(++k & 1);
}
BENCHMARK(BM_ApproxWindowPush)->Range(1 << 12, 1 << 24);

static void BM_ApproxWindowSs(benchmark::State& state) {
    uint64_t n = state.range(0);
    BinaryWindowApprox w(n, 64);
    std::mt19937_64 rng(4);
    for (uint64_t i = 0; i < 2 * n; ++i) w.push(rng() & 1);
    uint64_t i = 64;
    for (auto _ : state) {
        benchmark::DoNotOptimize(w.ss_est(i));
        i = i * 2862933555777941757ull % n + 1;
    }
}
BENCHMARK(BM_ApproxWindowSs)->Range(1 << 12, 1 << 24);

static void BM_SketchAdd(benchmark::State& state) {
    WindowSumSketch w(state.range(0), 255, 255 * 64);
    uint64_t k = 0;
    for (auto _ : state) w.add(++k % 256);
}
BENCHMARK(BM_SketchAdd)->Range(1 << 12, 1 << 24);

static void BM_SketchQuery(benchmark::State& state) {
    uint64_t n = state.range(0);
    WindowSumSketch w(n, 255, 255 * 64);
    std::mt19937_64 rng(6);
    for (uint64_t i = 0; i < 2 * n; ++i) w.add(rng() % 256);
    uint64_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(w.query(i).num);
        i = i * 2862933555777941757ull % n + 1;
    }
}
BENCHMARK(BM_SketchQuery)->Range(1 << 12, 1 << 24);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "approxrs/approx_bits.hpp"
#include "approxrs/sequence.hpp"

using namespace approxrs;

namespace {

std::vector<uint8_t> random_bits(uint64_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<uint8_t> v(n);
    for (auto& b : v) b = rng() & 1;
    return v;
}

}  // namespace

static void BM_MarkRank(benchmark::State& state) {
    uint64_t n = state.range(0);
    auto s = MarkRankSelect::build(random_bits(n, 1), 64, Backing::Plain);
    uint64_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.rank_est(i));
        i = i * 2862933555777941757ull % n + 1;
    }
}
BENCHMARK(BM_MarkRank)->Range(1 << 16, 1 << 24);

static void BM_MarkSelect(benchmark::State& state) {
    uint64_t n = state.range(0);
    auto s = MarkRankSelect::build(random_bits(n, 1), 64, Backing::Plain);
    uint64_t m = s.ones();
    uint64_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.select_est(i));
        i = i * 2862933555777941757ull % m + 1;
    }
}
BENCHMARK(BM_MarkSelect)->Range(1 << 16, 1 << 24);

static void BM_CountRank(benchmark::State& state) {
    uint64_t n = state.range(0);
    auto s = CountRankSelect::build(random_bits(n, 2), 64);
    uint64_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.rank_est(i));
        i = i * 2862933555777941757ull % n + 1;
    }
}
BENCHMARK(BM_CountRank)->Range(1 << 16, 1 << 24);

static void BM_SequenceRank(benchmark::State& state) {
    uint64_t n = state.range(0);
    std::mt19937_64 rng(5);
    std::vector<uint32_t> seq(n);
    for (auto& s : seq) s = 1 + rng() % 26;
    auto a = ApproxSequence::build(seq, 26, 16);
    uint64_t i = 1;
    uint32_t sym = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.rank_est(sym, i));
        i = i * 2862933555777941757ull % n + 1;
        sym = sym % 26 + 1;
    }
}
BENCHMARK(BM_SequenceRank)->Range(1 << 16, 1 << 20);

BENCHMARK_MAIN();

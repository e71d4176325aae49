#include <benchmark/benchmark.h>

#include <random>

#include "approxrs/bit_vector.hpp"
#include "approxrs/partial_sums.hpp"
#include "approxrs/sparse_bit_vector.hpp"

using namespace approxrs;

namespace {

std::vector<uint8_t> random_bits(uint64_t n, double density, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution d(density);
    std::vector<uint8_t> v(n);
    for (auto& b : v) b = d(rng);
    return v;
}

}  // namespace

static void BM_BitVectorRank(benchmark::State& state) {
    uint64_t n = state.range(0);
    auto bv = BitVector::from_bits(random_bits(n, 0.5, 42));
    uint64_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bv.rank(true, i));
        i = i * 2862933555777941757ull % n + 1;
    }
}
BENCHMARK(BM_BitVectorRank)->Range(1 << 16, 1 << 24);

static void BM_BitVectorSelect(benchmark::State& state) {
    uint64_t n = state.range(0);
    auto bv = BitVector::from_bits(random_bits(n, 0.5, 42));
    uint64_t m = bv.count(true);
    uint64_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bv.select(true, i));
        i = i * 2862933555777941757ull % m + 1;
    }
}
BENCHMARK(BM_BitVectorSelect)->Range(1 << 16, 1 << 24);

static void BM_SparseRank(benchmark::State& state) {
    uint64_t n = state.range(0);
    std::mt19937_64 rng(7);
    std::vector<uint64_t> pos;
    for (uint64_t p = 1 + rng() % 512; p <= n; p += 1 + rng() % 512) pos.push_back(p);
    auto sv = SparseBitVector::from_positions(n, pos);
    uint64_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sv.rank(true, i));
        i = i * 2862933555777941757ull % n + 1;
    }
}
BENCHMARK(BM_SparseRank)->Range(1 << 18, 1 << 26);

static void BM_PartialSumsSearch(benchmark::State& state) {
    uint64_t n = state.range(0);
    std::mt19937_64 rng(11);
    std::vector<uint64_t> vals(n);
    for (auto& v : vals) v = rng() % 256;
    auto ps = PartialSums::from_values(vals, 8);
    uint64_t total = ps.total();
    uint64_t x = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ps.search(x));
        x = x * 6364136223846793005ull % total;
    }
}
BENCHMARK(BM_PartialSumsSearch)->Range(1 << 16, 1 << 22);

BENCHMARK_MAIN();

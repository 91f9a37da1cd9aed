#include <benchmark/benchmark.h>

#include <random>

#include "lzc/bit_vector.hpp"
#include "lzc/elias_fano.hpp"
#include "lzc/range_predecessor.hpp"
#include "lzc/text_index.hpp"
#include "lzc/wavelet_tree.hpp"

namespace {

std::vector<uint8_t> random_bits(size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<uint8_t> bits(n);
  for (auto& b : bits) b = rng() & 1;
  return bits;
}

void BM_bitvector_rank(benchmark::State& state) {
  size_t n = static_cast<size_t>(state.range(0));
  lzc::BitVector bv(random_bits(n, 1));
  std::mt19937_64 rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(bv.rank(true, rng() % (n + 1)));
}
BENCHMARK(BM_bitvector_rank)->Arg(1 << 16)->Arg(1 << 22);

void BM_bitvector_select(benchmark::State& state) {
  size_t n = static_cast<size_t>(state.range(0));
  lzc::BitVector bv(random_bits(n, 3));
  size_t ones = bv.count_ones();
  std::mt19937_64 rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(bv.select(true, rng() % ones + 1));
}
BENCHMARK(BM_bitvector_select)->Arg(1 << 16)->Arg(1 << 22);

void BM_wavelet_rank(benchmark::State& state) {
  size_t n = 1 << 20;
  uint32_t sigma = static_cast<uint32_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::vector<uint32_t> seq(n);
  for (auto& v : seq) v = rng() % sigma;
  lzc::WaveletTree wt(seq, sigma);
  for (auto _ : state) benchmark::DoNotOptimize(wt.rank(rng() % sigma, rng() % n + 1));
}
BENCHMARK(BM_wavelet_rank)->Arg(4)->Arg(64)->Arg(1024);

void BM_ef_rank(benchmark::State& state) {
  std::mt19937_64 rng(6);
  size_t n = 1 << 20;
  uint64_t u = uint64_t{1} << 24;
  std::vector<uint64_t> keys;
  keys.reserve(n);
  uint64_t cur = 0;
  for (size_t i = 0; i < n; ++i) {
    cur += 1 + rng() % 15;
    keys.push_back(cur);
  }
  lzc::EliasFanoSeq ef(keys, u, n);
  for (auto _ : state) benchmark::DoNotOptimize(ef.rank(rng() % u));
}
BENCHMARK(BM_ef_rank);

void BM_rp_build(benchmark::State& state) {
  size_t n = static_cast<size_t>(state.range(0));
  uint32_t c = static_cast<uint32_t>(state.range(1));
  std::mt19937_64 rng(7);
  std::vector<uint32_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = static_cast<uint32_t>(i + 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto _ : state) {
    lzc::RangePredIndex idx(lzc::PointSet::from_y_of_x(perm), c);
    benchmark::DoNotOptimize(idx.node_count());
  }
}
BENCHMARK(BM_rp_build)->Args({1 << 16, 2})->Args({1 << 20, 2})->Args({1 << 16, 3})
    ->Unit(benchmark::kMillisecond);

void BM_rp_query(benchmark::State& state) {
  size_t n = 1 << 18;
  std::mt19937_64 rng(8);
  std::vector<uint32_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = static_cast<uint32_t>(i + 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  lzc::RangePredIndex idx(lzc::PointSet::from_y_of_x(perm), 2);
  for (auto _ : state) {
    size_t x1 = rng() % n + 1, x2 = rng() % n + 1;
    if (x1 > x2) std::swap(x1, x2);
    benchmark::DoNotOptimize(idx.query(x1, x2, rng() % n + 1));
  }
}
BENCHMARK(BM_rp_query);

}  // anonymous

BENCHMARK_MAIN();

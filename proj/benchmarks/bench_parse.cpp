#include <benchmark/benchmark.h>

#include <random>

#include "lzc/lz_parse.hpp"
#include "lzc/rightmost.hpp"

namespace {

std::vector<uint8_t> repetitive(size_t n, uint32_t sigma, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<uint8_t> out(n);
  std::vector<uint8_t> base(1024);
  for (auto& b : base) b = static_cast<uint8_t>('a' + rng() % sigma);
  for (size_t i = 0; i < n; ++i) {
    out[i] = base[i % base.size()];
    if (rng() % 1000 == 0) out[i] = static_cast<uint8_t>('a' + rng() % sigma);
  }
  return out;
}

std::vector<uint8_t> random_text(size_t n, uint32_t sigma, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<uint8_t> out(n);
  for (auto& b : out) b = static_cast<uint8_t>('a' + rng() % sigma);
  return out;
}

void BM_parse_repetitive(benchmark::State& state) {
  auto text = repetitive(static_cast<size_t>(state.range(0)), 4, 11);
  for (auto _ : state) {
    auto res = lzc::lz_parse(text);
    benchmark::DoNotOptimize(res.factors.size());
  }
  state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_parse_repetitive)->Arg(1 << 20)->Arg(1 << 22)->Unit(benchmark::kMillisecond);

void BM_parse_random(benchmark::State& state) {
  auto text = random_text(static_cast<size_t>(state.range(0)), 26, 12);
  for (auto _ : state) {
    auto res = lzc::lz_parse(text);
    benchmark::DoNotOptimize(res.factors.size());
  }
  state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_parse_random)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_rightmost(benchmark::State& state) {
  auto text = repetitive(static_cast<size_t>(state.range(0)), 4, 13);
  lzc::RightmostConfig cfg;
  cfg.mode = state.range(1) ? lzc::RightmostMode::stratified : lzc::RightmostMode::basic;
  for (auto _ : state) {
    auto res = lzc::rightmost_parse(text, cfg);
    benchmark::DoNotOptimize(res.factors.size());
  }
  state.SetBytesProcessed(int64_t(state.iterations()) * state.range(0));
}
BENCHMARK(BM_rightmost)->Args({1 << 18, 0})->Args({1 << 18, 1})->Unit(benchmark::kMillisecond);

}  // anonymous

BENCHMARK_MAIN();

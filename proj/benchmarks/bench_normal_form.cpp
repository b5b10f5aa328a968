#include <benchmark/benchmark.h>

#include <random>

#include "garside/conjugacy.hpp"

namespace {

garside::BraidWord random_word(int n, int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) letters.push_back(sign(rng) ? idx(rng) : -idx(rng));
  return garside::BraidWord::from_signed(garside::StrandCount(n), letters);
}

void BM_Normalize(benchmark::State& state) {
  const auto w = random_word(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(garside::normalize(w));
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_Normalize)->ArgsProduct({{4, 8, 16}, {50, 200, 800}});

void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = garside::normalize(random_word(n, static_cast<int>(state.range(1)), 2));
  const auto y = garside::normalize(random_word(n, static_cast<int>(state.range(1)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(garside::multiply(x, y));
}
BENCHMARK(BM_Multiply)->ArgsProduct({{4, 8, 16}, {50, 200}});

void BM_Invert(benchmark::State& state) {
  const auto x = garside::normalize(random_word(static_cast<int>(state.range(0)), 400, 4));
  for (auto _ : state) benchmark::DoNotOptimize(garside::invert(x));
}
BENCHMARK(BM_Invert)->Arg(4)->Arg(8)->Arg(16);

void BM_SlideToCircuit(benchmark::State& state) {
  const auto x = garside::normalize(random_word(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(garside::slide_to_circuit(x));
}
BENCHMARK(BM_SlideToCircuit)->ArgsProduct({{4, 8}, {50, 200}});

}  // namespace

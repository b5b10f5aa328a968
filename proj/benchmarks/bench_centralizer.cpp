#include <benchmark/benchmark.h>

#include "garside/genericity.hpp"

namespace {

garside::NormalForm sample(int n, int l, std::uint64_t trial) {
  garside::SampleConfig cfg{garside::StrandCount(n)};
  cfg.l = l;
  cfg.seed = 17;
  return garside::sample_normal_form(cfg, trial);
}

void BM_MinimalElementsPullback(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  garside::NormalForm x = garside::slide_to_circuit(sample(n, static_cast<int>(state.range(1)), 0)).element;
  for (std::uint64_t t = 1; !garside::is_rigid(x); ++t) {
    x = garside::slide_to_circuit(sample(n, static_cast<int>(state.range(1)), t)).element;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        garside::minimal_simple_elements(x, x.canonical_length(), garside::MinimalMethod::RigidPullback));
  }
}
BENCHMARK(BM_MinimalElementsPullback)->ArgsProduct({{4, 8}, {25, 100}});

// Runtime against l at fixed n; the complexity fit should stay near l².
void BM_Centralizer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int l = static_cast<int>(state.range(1));
  std::vector<garside::NormalForm> inputs;
  for (std::uint64_t t = 0; t < 8; ++t) inputs.push_back(sample(n, l, t));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(garside::centralizer_generators(inputs[i++ % inputs.size()]));
  state.SetComplexityN(l);
}
BENCHMARK(BM_Centralizer)
    ->ArgsProduct({{8}, {25, 50, 100, 200}})
    ->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

void BM_Experiment(benchmark::State& state) {
  garside::ExperimentConfig cfg{garside::StrandCount(4)};
  cfg.lengths = {static_cast<int>(state.range(0))};
  cfg.trials = 50;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(garside::run_experiment(cfg));
}
BENCHMARK(BM_Experiment)->Arg(8)->Arg(24)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "polyctmc/simulate.hpp"

using namespace polyctmc;

namespace {

ChainSpec immigration_death() {
  FiniteKernel k;
  k.rates[1] = Polynomial::constant(Rational(1));
  k.rates[-1] = Polynomial({Rational(0), Rational(1)});
  k.tail_threshold = 1;
  k.overrides[{0, 1}] = Rational(1);
  return ChainSpec(std::move(k), {});
}

}  // namespace

static void jump_throughput(benchmark::State& state) {
  const ChainSpec spec = immigration_death();
  SimConfig cfg;
  cfg.x0 = 5;
  cfg.trials = 1;
  cfg.max_jumps = state.range(0);
  cfg.t_max = 1e18;
  cfg.record_occupation = false;
  long long jumps = 0;
  uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    const TrialBatch batch = simulate(spec, cfg);
    jumps += batch.summary.total_jumps;
  }
  state.SetItemsProcessed(jumps);
}
BENCHMARK(jump_throughput)->Arg(100000)->Unit(benchmark::kMillisecond);

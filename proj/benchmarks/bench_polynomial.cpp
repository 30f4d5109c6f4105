#include <benchmark/benchmark.h>

#include "polyctmc/polynomial.hpp"

using namespace polyctmc;

static void descending_factorial_build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Polynomial::descending_factorial(n));
}
BENCHMARK(descending_factorial_build)->Arg(4)->Arg(8)->Arg(16);

static void exact_eval(benchmark::State& state) {
  const Polynomial p = Polynomial::descending_factorial(8);
  const BigInt x(1'000'003);
  for (auto _ : state) benchmark::DoNotOptimize(p.eval(x));
}
BENCHMARK(exact_eval);

static void float_eval(benchmark::State& state) {
  const Polynomial p = Polynomial::descending_factorial(8);
  for (auto _ : state) benchmark::DoNotOptimize(p.eval_double(1e6));
}
BENCHMARK(float_eval);

#include <benchmark/benchmark.h>

#include "polyctmc/classifier.hpp"
#include "polyctmc/network.hpp"

using namespace polyctmc;

namespace {

Network family_network(int m) {
  Network net;
  const Rational one(1);
  net.reactions.push_back({0, m, one});
  net.reactions.push_back({m, 0, one});
  net.reactions.push_back({m, m + 1, one});
  net.reactions.push_back({m + 1, m, Rational(2)});
  net.reactions.push_back({m + 1, m + 3, one});
  return net;
}

}  // namespace

static void compile_and_classify(benchmark::State& state) {
  const Network net = family_network(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const ChainSpec spec = compile_mass_action(net);
    const Parameters p = compute_parameters(spec);
    benchmark::DoNotOptimize(classify(p, !spec.absorbing_set().empty()));
  }
}
BENCHMARK(compile_and_classify)->Arg(1)->Arg(3);

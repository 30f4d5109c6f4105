#include <doctest.h>

#include "polyctmc/parameters.hpp"
#include "test_models.hpp"

using namespace polyctmc;
using namespace polyctmc::testmodels;

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(finite_chain({{0, poly({1})}}, 0), ModelError);  // zero jump size
  // negative override
  FiniteKernel k;
  k.rates[{1}] = poly({1});
  k.rates[{-1}] = poly({0, 1});
  k.tail_threshold = 1;
  k.overrides[{0, 1}] = rat(-1);
  CHECK_THROWS_AS(ChainSpec(k, {}), ModelError);
  // override at or above the threshold
  k.overrides.clear();
  k.overrides[{1, 1}] = rat(1);
  CHECK_THROWS_AS(ChainSpec(k, {}), ModelError);
  // positive override jumping below zero
  k.overrides.clear();
  k.overrides[{0, -1}] = rat(1);
  CHECK_THROWS_AS(ChainSpec(k, {}), ModelError);
}

TEST_CASE("absorbing set must be closed") {
  // 0 declared absorbing but the constant birth rate fires there.
  CHECK_THROWS_AS(finite_chain({{1, poly({1})}, {-1, poly({0, 1})}}, 1, {0}, {{{0, 1}, rat(1)}}),
                  ModelError);
  // runaway-style: 1 -> 0 stays inside {0, 1}.
  CHECK_NOTHROW(finite_chain({{1, poly({0, -1, 1})}, {-1, poly({0, 1})}}, 2, {0, 1}));
}

TEST_CASE("effective rates: overrides below the threshold, polynomials above") {
  const ChainSpec spec = implosivity_example();
  auto at0 = spec.finite_jump_rates(0);
  REQUIRE(at0.size() == 1);
  CHECK(at0[0].first == 1);
  CHECK(at0[0].second == rat(1));
  auto at5 = spec.finite_jump_rates(5);
  REQUIRE(at5.size() == 2);  // map order: -1 first
  CHECK(at5[0].first == -1);
  CHECK(at5[0].second == rat(5));
  CHECK(at5[1].first == 1);
  CHECK(at5[1].second == rat(1));
}

TEST_CASE("generator application on a finite kernel") {
  const ChainSpec spec = implosivity_example();
  auto identity = [](long long y) { return static_cast<double>(y); };
  CHECK(apply_generator(spec, identity, 5) == doctest::Approx(-4.0));
  auto constant = [](long long) { return 3.25; };
  for (long long x : {0, 1, 7, 100}) CHECK(apply_generator(spec, constant, x) == 0.0);
  auto bad = [](long long y) { return y == 6 ? std::numeric_limits<double>::infinity() : 1.0; };
  CHECK_THROWS_AS(apply_generator(spec, bad, 5), std::domain_error);
}

TEST_CASE("generator annihilates constants on burst kernels too") {
  const ChainSpec spec = build_verhulst(rat(1), 10, JumpLaw::geometric(rat(1, 2)));
  auto constant = [](long long) { return -2.0; };
  for (long long x : {1, 5, 50}) CHECK(apply_generator(spec, constant, x) == doctest::Approx(0.0));
}

TEST_CASE("generator with identity matches the exact drift polynomial") {
  const ChainSpec spec = compile_mass_action(eq1_second_network());
  const Polynomial drift = drift_polynomial(spec);
  auto identity = [](long long y) { return static_cast<double>(y); };
  for (long long x : {1, 2, 10, 100, 1000}) {
    const double exact = drift.eval(x).to_double();
    const double viaq = apply_generator(spec, identity, x);
    CHECK(viaq == doctest::Approx(exact).epsilon(1e-9));
  }
  CHECK(apply_generator(spec, identity, 100) == doctest::Approx(100.0 * 100.0));  // drift = x^2
}

TEST_CASE("rate scaling") {
  const ChainSpec spec = implosivity_example();
  const ChainSpec doubled = spec.scaled(rat(2));
  CHECK(doubled.finite_jump_rates(5)[0].second == rat(10));
  CHECK(doubled.finite_jump_rates(0)[0].second == rat(2));
  CHECK_THROWS_AS(spec.scaled(rat(0)), ModelError);
}

TEST_CASE("support finiteness flag") {
  CHECK(implosivity_example().support_finite());
  CHECK(build_verhulst(rat(1), 10, JumpLaw::dirac(1)).support_finite());
  CHECK_FALSE(build_verhulst(rat(1), 10, JumpLaw::geometric(rat(1, 2))).support_finite());
  CHECK(build_runaway(rat(1), 10, JumpLaw::finite_pmf({{2, rat(1)}})).support_finite());
}

TEST_CASE("jump extents") {
  const ChainSpec spec = compile_mass_action(srn2_network(3, {rat(1), rat(1), rat(1), rat(2), rat(1)}));
  CHECK(spec.max_backward_jump() == 3);
  CHECK(spec.max_forward_jump_truncated() == 3);
}

#ifndef POLYCTMC_TEST_MODELS_HPP
#define POLYCTMC_TEST_MODELS_HPP

// Chains used across test suites, built from first principles (reaction
// lists or explicit kernels), so every expected value downstream has an
// independent construction route.

#include "polyctmc/builders.hpp"
#include "polyctmc/network.hpp"

namespace polyctmc::testmodels {

inline Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

inline Polynomial poly(std::initializer_list<long long> coeffs) {
  std::vector<Rational> v;
  for (long long c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

/// Finite kernel from tail polynomials; overrides below u filled from the
/// polynomial values (clamped to the states where they are non-negative).
inline ChainSpec finite_chain(std::map<int, Polynomial> rates, long long u,
                              std::set<long long> absorbing = {},
                              std::map<StateJump, Rational> extra_overrides = {},
                              std::set<long long> excluded = {}) {
  FiniteKernel k;
  k.rates = std::move(rates);
  k.tail_threshold = u;
  for (long long x = 0; x < u; ++x)
    for (const auto& [omega, p] : k.rates) {
      Rational v = p.eval(x);
      if (v.sign() > 0 && x + omega >= 0) k.overrides[{x, omega}] = std::move(v);
    }
  for (auto& [key, v] : extra_overrides) k.overrides[key] = v;
  return ChainSpec(std::move(k), std::move(absorbing), "test", std::move(excluded));
}

/// Immigration-death chain: up at constant rate 1, down at rate x.
inline ChainSpec implosivity_example() {
  return finite_chain({{1, poly({1})}, {-1, poly({0, 1})}}, 1);
}

/// Quadratic birth-death chain: both rates x^2, 0 absorbing (reached from 1
/// at rate 1).
inline ChainSpec quadratic_bdp() {
  return finite_chain({{1, poly({0, 0, 1})}, {-1, poly({0, 0, 1})}}, 1, {0});
}

/// Linear birth-death chain with rates a x (up), b x (down); an override
/// birth at 0 keeps it irreducible when `irreducible` is set, otherwise 0
/// is absorbing.
inline ChainSpec linear_bdp(const Rational& a, const Rational& b, bool irreducible) {
  std::map<int, Polynomial> rates{{1, Polynomial({Rational(0), a})},
                                  {-1, Polynomial({Rational(0), b})}};
  if (irreducible) return finite_chain(std::move(rates), 1, {}, {{{0, 1}, a}});
  return finite_chain(std::move(rates), 1, {0});
}

/// Constant-rate random walk on the non-negative integers with reflection
/// pressure from the override-free boundary: up rate a, down rate b.
inline ChainSpec constant_bdp(const Rational& a, const Rational& b) {
  return finite_chain({{1, Polynomial::constant(a)}, {-1, Polynomial::constant(b)}}, 1, {},
                      {{{0, 1}, a}});
}

/// Near-critical chain for the hitting-tail study: up x + 1/2, down x.
inline ChainSpec near_critical_chain() {
  return finite_chain({{1, Polynomial({rat(1, 2), rat(1)})}, {-1, poly({0, 1})}}, 1, {},
                      {{{0, 1}, rat(1, 2)}});
}

inline Network eq1_first_network() {
  return parse_network(
      "S <-> 2S @ 1, 2\n"
      "2S <-> 3S @ 4, 4\n"
      "3S <-> 4S @ 6, 1\n"
      "4S -> 5S @ 1\n");
}

inline Network eq1_second_network() {
  return parse_network(
      "S <-> 2S @ 1, 2\n"
      "2S <-> 3S @ 3, 1\n"
      "3S -> 4S @ 1\n");
}

/// 0 <-> mS <-> (m+1)S -> (m+3)S with constants kappa_1..kappa_5.
inline Network srn2_network(int m, const std::array<Rational, 5>& kappa) {
  Network net;
  net.reactions.push_back({0, m, kappa[0]});
  net.reactions.push_back({m, 0, kappa[1]});
  net.reactions.push_back({m, m + 1, kappa[2]});
  net.reactions.push_back({m + 1, m, kappa[3]});
  net.reactions.push_back({m + 1, m + 3, kappa[4]});
  return net;
}

}  // namespace polyctmc::testmodels

#endif

#include "polyctmc/parameters.hpp"

namespace polyctmc {

namespace {

// Accumulates sum over jumps of lambda_omega(x) * weight(omega), where
// weight is omega or omega^2. Burst channels contribute base * E[weight(Z)].
Polynomial moment_polynomial(const ChainSpec& spec, int power) {
  Polynomial acc;
  const auto& rates = spec.finite_kernel() ? spec.finite_kernel()->rates : spec.distribution_kernel()->rates;
  for (const auto& [omega, poly] : rates) {
    Rational w(omega);
    if (power == 2) w *= Rational(omega);
    acc = acc + poly.scale(w);
  }
  if (const auto* dk = spec.distribution_kernel()) {
    for (const auto& ch : dk->channels) {
      const Rational w = power == 2 ? ch.law.second_moment() : ch.law.mean();
      acc = acc + ch.base.scale(w);
    }
  }
  return acc;
}

}  // namespace

Polynomial drift_polynomial(const ChainSpec& spec) { return moment_polynomial(spec, 1); }

Polynomial second_moment_polynomial(const ChainSpec& spec) { return moment_polynomial(spec, 2); }

Parameters compute_parameters(const ChainSpec& spec) {
  Parameters p;
  p.support_finite = spec.support_finite();

  int R = 0;
  const auto& rates = spec.finite_kernel() ? spec.finite_kernel()->rates : spec.distribution_kernel()->rates;
  for (const auto& [omega, poly] : rates) {
    (void)omega;
    R = std::max(R, poly.degree());
  }
  if (const auto* dk = spec.distribution_kernel())
    for (const auto& ch : dk->channels) R = std::max(R, ch.base.degree());
  p.R = R;

  p.drift = drift_polynomial(spec);
  p.alpha = p.drift.coeff(R);
  p.gamma = R >= 1 ? p.drift.coeff(R - 1) : Rational();

  p.second_moment = second_moment_polynomial(spec);
  const Rational lead2 = p.second_moment->coeff(R);
  p.vartheta = lead2 / Rational(2);
  p.beta = p.gamma - *p.vartheta;
  p.beta_informational = !p.support_finite;
  return p;
}

}  // namespace polyctmc

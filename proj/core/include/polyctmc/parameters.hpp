#ifndef POLYCTMC_PARAMETERS_HPP
#define POLYCTMC_PARAMETERS_HPP

#include <optional>

#include "polyctmc/chain.hpp"

namespace polyctmc {

/// The threshold parameters of a chain, all exact.
///   R      largest degree among the tail rate polynomials,
///   alpha  coefficient of x^R in the tail drift,
///   gamma  coefficient of x^(R-1) in the tail drift,
///   beta   gamma minus half the x^R coefficient of the second-moment rate,
///   vartheta = gamma - beta.
/// beta (and vartheta) require second moments of the jump sizes; for
/// infinite-support burst kernels they are informational only and the
/// classifier falls back to the theorems that do not consume them.
struct Parameters {
  int R = 0;
  Rational alpha;
  Rational gamma;
  std::optional<Rational> beta;
  std::optional<Rational> vartheta;
  bool support_finite = true;
  bool beta_informational = false;
  Polynomial drift;                        // sum_omega lambda_omega(x) * omega on the tail
  std::optional<Polynomial> second_moment; // sum_omega lambda_omega(x) * omega^2 on the tail
};

/// Exact tail drift polynomial. Small-state overrides are ignored: the
/// parameters are limits at infinity.
Polynomial drift_polynomial(const ChainSpec& spec);
/// Exact tail second-moment polynomial.
Polynomial second_moment_polynomial(const ChainSpec& spec);

Parameters compute_parameters(const ChainSpec& spec);

}  // namespace polyctmc

#endif

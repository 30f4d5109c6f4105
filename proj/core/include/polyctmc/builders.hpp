#ifndef POLYCTMC_BUILDERS_HPP
#define POLYCTMC_BUILDERS_HPP

#include <map>
#include <vector>

#include "polyctmc/chain.hpp"

namespace polyctmc {

/// Extended branching process: from x >= 1 the chain jumps to x - 1 + Z at
/// rate r(x) per offspring event, Z distributed by `offspring` (so the jump
/// size is Z - 1). The row of rates out of state 0 is q0_row; when it is
/// empty, 0 is absorbing. Requirements: offspring mass at 0 positive, mass
/// at {0,1} below 1, finite mean, and r a polynomial of degree >= 1 that is
/// positive on the positive integers.
ChainSpec build_branching(const Polynomial& r, const JumpLaw& offspring,
                          const std::map<long long, Rational>& q0_row = {});

/// Bursty gene-expression model: production channels m S -> (m + k) S at
/// rate c[m] x(x-1)...(x-m+1) mu_m(k) for m = 0..J1, and degradation
/// m S -> (m-1) S at rate rdeg[m-1] x(x-1)...(x-m+1) for m = 1..J2 (rdeg has
/// J2 entries). Requires J1 <= J2, c0 > 0, c_J1 > 0, r1 > 0, r_J2 > 0.
ChainSpec build_gene_model(const std::vector<Rational>& c, const std::vector<Rational>& rdeg,
                           const std::vector<JumpLaw>& mus);

/// Verhulst logistic model with bursty reproduction: births x -> x + k at
/// rate c mu(k) x, deaths at rate (c/K) x^2 + x; 0 is absorbing.
ChainSpec build_verhulst(const Rational& c, long long K, const JumpLaw& mu);

/// Runaway model with bursty pair reproduction: x -> x + k at rate
/// (c/K) mu(k) x(x-1), deaths at rate x; {0, 1} is absorbing.
ChainSpec build_runaway(const Rational& c, long long K, const JumpLaw& mu);

}  // namespace polyctmc

#endif

#include "polyctmc/builders.hpp"

namespace polyctmc {

ChainSpec build_branching(const Polynomial& r, const JumpLaw& offspring,
                          const std::map<long long, Rational>& q0_row) {
  const auto m0 = offspring.mass_at(0);
  const auto m1 = offspring.mass_at(1);
  if (!m0 || !m1)
    throw ModelError("branching offspring law must have exact point masses at 0 and 1 (" +
                     offspring.str() + ")");
  if (m0->sign() <= 0)
    throw ModelError("branching hypothesis violated: offspring mass at 0 must be positive");
  if (*m0 + *m1 >= Rational(1))
    throw ModelError("branching hypothesis violated: offspring mass must not concentrate on {0,1}");
  if (r.is_zero() || r.degree() < 1)
    throw ModelError("branching hypothesis violated: r must be a polynomial of degree >= 1");
  if (r.leading_coeffs().a.sign() <= 0)
    throw ModelError("branching hypothesis violated: r must be eventually positive");
  const BigInt horizon = r.positivity_horizon();
  const long long check_to = horizon > 10000 ? 10000 : horizon.convert_to<long long>();
  for (long long x = 1; x <= check_to; ++x)
    if (r.eval(x).sign() <= 0)
      throw ModelError("branching rate r is not positive at state " + std::to_string(x));

  DistributionKernel kernel;
  kernel.tail_threshold = 1;
  kernel.rates[-1] = r.scale(*m0);
  kernel.channels.push_back({r, offspring.offspring_shift()});
  for (const auto& [y, rate] : q0_row) {
    if (y <= 0) throw ModelError("q0 row entries must target positive states");
    if (rate.sign() <= 0) throw ModelError("q0 row rates must be positive");
    kernel.overrides[{0, static_cast<int>(y)}] = rate;
  }

  std::set<long long> absorbing;
  if (q0_row.empty()) absorbing.insert(0);
  return ChainSpec(std::move(kernel), std::move(absorbing), "branching");
}

ChainSpec build_gene_model(const std::vector<Rational>& c, const std::vector<Rational>& rdeg,
                           const std::vector<JumpLaw>& mus) {
  if (c.empty() || rdeg.empty()) throw ModelError("gene model needs production and degradation lists");
  const size_t j1 = c.size() - 1;   // channels m = 0..J1
  const size_t j2 = rdeg.size();    // degradation m = 1..J2
  if (mus.size() != c.size()) throw ModelError("gene model needs one burst law per production channel");
  if (j1 > j2)
    throw ModelError("gene model hypothesis violated: production order exceeds degradation order");
  if (c.front().sign() <= 0)
    throw ModelError("gene model hypothesis violated: c0 must be positive");
  if (c.back().sign() <= 0)
    throw ModelError("gene model hypothesis violated: the top production constant must be positive");
  if (rdeg.front().sign() <= 0 || rdeg.back().sign() <= 0)
    throw ModelError("gene model hypothesis violated: r1 and the top degradation constant must be positive");
  for (const auto& v : c)
    if (v.sign() < 0) throw ModelError("gene model production constants must be non-negative");
  for (const auto& v : rdeg)
    if (v.sign() < 0) throw ModelError("gene model degradation constants must be non-negative");

  DistributionKernel kernel;
  Polynomial death;
  for (size_t m = 1; m <= j2; ++m)
    death = death + Polynomial::descending_factorial(static_cast<int>(m)).scale(rdeg[m - 1]);
  kernel.rates[-1] = death;
  for (size_t m = 0; m <= j1; ++m) {
    if (c[m].sign() == 0) continue;
    kernel.channels.push_back(
        {Polynomial::descending_factorial(static_cast<int>(m)).scale(c[m]), mus[m]});
  }
  kernel.tail_threshold = std::max<long long>(1, static_cast<long long>(j1));

  // Below the threshold the descending factorials are still exact and
  // non-negative; store their values.
  for (long long x = 0; x < kernel.tail_threshold; ++x) {
    Rational d = death.eval(x);
    if (d.sign() > 0) kernel.overrides[{x, -1}] = std::move(d);
    for (size_t ch = 0; ch < kernel.channels.size(); ++ch) {
      Rational b = kernel.channels[ch].base.eval(x);
      if (b.sign() > 0) kernel.channel_overrides[{x, ch}] = std::move(b);
    }
  }
  return ChainSpec(std::move(kernel), {}, "gene-expression");
}

ChainSpec build_verhulst(const Rational& c, long long K, const JumpLaw& mu) {
  if (c.sign() <= 0) throw ModelError("verhulst reproduction rate must be positive");
  if (K < 1) throw ModelError("verhulst carrying capacity must be a positive integer");

  DistributionKernel kernel;
  kernel.tail_threshold = 1;
  // deaths at (c/K) x^2 + x
  kernel.rates[-1] = Polynomial({Rational(0), Rational(1), c / Rational(K)});
  // births at c x per burst of size k ~ mu
  kernel.channels.push_back({Polynomial({Rational(0), c}), mu});
  return ChainSpec(std::move(kernel), {0}, "verhulst");
}

ChainSpec build_runaway(const Rational& c, long long K, const JumpLaw& mu) {
  if (c.sign() <= 0) throw ModelError("runaway reproduction rate must be positive");
  if (K < 1) throw ModelError("runaway carrying capacity must be a positive integer");

  DistributionKernel kernel;
  kernel.tail_threshold = 2;
  kernel.rates[-1] = Polynomial({Rational(0), Rational(1)});  // deaths at rate x
  kernel.channels.push_back(
      {Polynomial::descending_factorial(2).scale(c / Rational(K)), mu});  // (c/K) x(x-1) bursts
  kernel.overrides[{1, -1}] = Rational(1);
  return ChainSpec(std::move(kernel), {0, 1}, "runaway");
}

}  // namespace polyctmc

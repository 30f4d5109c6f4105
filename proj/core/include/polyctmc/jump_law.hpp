#ifndef POLYCTMC_JUMP_LAW_HPP
#define POLYCTMC_JUMP_LAW_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyctmc/rational.hpp"
#include "polyctmc/rng.hpp"

namespace polyctmc {

/// Probability law of a burst/jump size on the non-negative integers.
/// Mass at 0 is permitted and inert: it never produces a transition, the
/// effective rate of a burst channel scales by 1 - pmf(0). The mean and
/// second moment are exact rationals for every supported kind, which is what
/// keeps the threshold parameters exact for burst-driven kernels.
class JumpLaw {
 public:
  enum class Kind { Dirac, Geometric, Poisson, NegativeBinomial, FinitePmf, OffspringShift };

  static JumpLaw dirac(long long k);
  /// pmf(k) = (1-p) p^k on {0,1,2,...}, 0 < p < 1.
  static JumpLaw geometric(const Rational& p);
  static JumpLaw poisson(const Rational& lambda);
  /// Number of failures before the r-th success; r a positive integer,
  /// pmf(k) = C(k+r-1,k) (1-p)^r p^k.
  static JumpLaw negative_binomial(long long r, const Rational& p);
  /// Explicit finite pmf; weights must be non-negative and sum to exactly 1.
  static JumpLaw finite_pmf(const std::map<long long, Rational>& pmf);

  /// The law of Z - 1 conditioned on Z >= 2, with the discarded mass
  /// (Z = 0 and Z = 1) folded into the inert point 0. Used by the branching
  /// builder, where Z is the offspring count and the jump size is Z - 1.
  JumpLaw offspring_shift() const;

  Kind kind() const { return kind_; }
  const Rational& mean() const { return mean_; }
  const Rational& second_moment() const { return second_moment_; }
  bool finite_support() const { return finite_support_; }
  /// Largest k with positive mass (finite-support laws only).
  long long max_support() const { return max_support_; }

  /// Exact point mass, when representable in rationals (everything except
  /// Poisson, whose masses involve e^-lambda).
  std::optional<Rational> mass_at(long long k) const;

  double pmf(long long k) const;
  /// Total mass on {1, 2, ...}; effective rate factor of a burst channel.
  double mass_ge1() const { return mass_ge1_; }
  /// Smallest K with P(Z > K) < eps; jump support is truncated there for
  /// generator sums and reachability graphs.
  long long truncation_point(double eps) const;

  /// Sample conditioned on k >= 1 (rejection for laws with mass at 0).
  long long sample_ge1(RngStream& rng) const;

  std::string str() const;  // canonical literal, e.g. "geom(1/2)"

  /// Parses "dirac(2)", "geom(1/2)", "poisson(3)", "negbin(2,1/3)",
  /// "pmf{0:1/4, 2:3/4}".
  static JumpLaw parse(std::string_view text);

 private:
  JumpLaw() = default;
  void finalize();

  Kind kind_ = Kind::Dirac;
  long long k_ = 0;          // dirac point / negbin r
  Rational p_;               // geometric / negbin success parameter, poisson rate
  std::map<long long, Rational> pmf_;  // FinitePmf and OffspringShift
  Rational mean_;
  Rational second_moment_;
  bool finite_support_ = true;
  long long max_support_ = 0;
  double mass_ge1_ = 1.0;
  std::shared_ptr<const JumpLaw> base_;  // OffspringShift over an infinite-support base
  // Walker alias table over the k >= 1 part, for FinitePmf laws.
  std::vector<double> alias_prob_;
  std::vector<long long> alias_out_, alias_val_;
};

}  // namespace polyctmc

#endif

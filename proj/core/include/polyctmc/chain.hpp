#ifndef POLYCTMC_CHAIN_HPP
#define POLYCTMC_CHAIN_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "polyctmc/jump_law.hpp"
#include "polyctmc/polynomial.hpp"

namespace polyctmc {

/// Model-level construction/validation failure (bad kernel, broken builder
/// hypothesis, absorbing set not closed, ...).
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

using StateJump = std::pair<long long, int>;  // (state x < u, jump size)

/// Jump kernel with finitely many jump sizes: lambda_omega(x) is a polynomial
/// for x >= tail_threshold, and an explicit override table below it (absent
/// entries mean rate zero, which is how mass-action rates vanish near 0).
struct FiniteKernel {
  std::map<int, Polynomial> rates;  // omega != 0 -> lambda_omega on the tail
  long long tail_threshold = 0;     // u
  std::map<StateJump, Rational> overrides;
};

/// One bursty channel: forward jump k >= 1 fires at rate base(x) * law.pmf(k).
/// Law mass at 0 is inert (no transition).
struct BurstChannel {
  Polynomial base;
  JumpLaw law;
};

/// Kernel of polynomial-times-distribution type: bursty forward channels plus
/// finitely many polynomial-rate jumps (typically the backward ones).
struct DistributionKernel {
  std::vector<BurstChannel> channels;
  std::map<int, Polynomial> rates;  // finite-jump part, used for x >= u
  long long tail_threshold = 0;     // u
  std::map<StateJump, Rational> overrides;             // finite jumps below u
  std::map<std::pair<long long, size_t>, Rational> channel_overrides;  // channel bases below u
};

/// Truncation threshold for infinite-support burst laws: generator sums and
/// reachability graphs ignore jump sizes whose tail mass is below this.
inline constexpr double kLawTailEps = 1e-12;

/// A continuous-time Markov chain on the non-negative integers: a jump kernel
/// plus a declared absorbing set. States in `excluded` are isolated trivial
/// classes that the rest of the chain can never enter (for instance state 0
/// of a network whose every reaction needs at least one molecule); they are
/// not part of the state space. Immutable after construction.
class ChainSpec {
 public:
  ChainSpec(FiniteKernel kernel, std::set<long long> absorbing = {}, std::string label = {},
            std::set<long long> excluded = {});
  ChainSpec(DistributionKernel kernel, std::set<long long> absorbing = {}, std::string label = {},
            std::set<long long> excluded = {});

  bool has_distribution_kernel() const { return std::holds_alternative<DistributionKernel>(kernel_); }
  const FiniteKernel* finite_kernel() const { return std::get_if<FiniteKernel>(&kernel_); }
  const DistributionKernel* distribution_kernel() const { return std::get_if<DistributionKernel>(&kernel_); }

  const std::set<long long>& absorbing_set() const { return absorbing_; }
  const std::set<long long>& excluded_states() const { return excluded_; }
  const std::string& label() const { return label_; }

  long long tail_threshold() const;
  /// True iff the jump set is finite: finite kernel, or every burst law of
  /// finite support.
  bool support_finite() const;
  bool in_state_space(long long x) const { return x >= 0 && !excluded_.count(x); }

  /// Exact rates of the finite-jump part at state x (override table below u,
  /// tail polynomials from u on). Only positive rates are returned.
  std::vector<std::pair<int, Rational>> finite_jump_rates(long long x) const;
  /// Exact base values of each burst channel at state x (empty for finite
  /// kernels). Pairs (channel index, base rate), positive entries only.
  std::vector<std::pair<size_t, Rational>> channel_bases(long long x) const;

  /// Largest |omega| over backward jumps (0 if none).
  long long max_backward_jump() const;
  /// Largest forward jump under truncation of infinite-support laws.
  long long max_forward_jump_truncated(double eps = kLawTailEps) const;

  /// Scales every rate (polynomials and overrides) by c > 0.
  ChainSpec scaled(const Rational& c) const;

  /// All jump targets y with positive rate from x, law support truncated;
  /// used by reachability analysis.
  void neighbors(long long x, double eps, const std::function<void(long long)>& visit) const;

 private:
  void validate();

  std::variant<FiniteKernel, DistributionKernel> kernel_;
  std::set<long long> absorbing_;
  std::set<long long> excluded_;
  std::string label_;
};

/// Generator application Qf(x) = sum_omega lambda_omega(x) (f(x+omega)-f(x)),
/// evaluated in floating point; burst sums truncated at kLawTailEps tail
/// mass. Throws std::domain_error if f evaluates to a non-finite value.
double apply_generator(const ChainSpec& spec, const std::function<double(long long)>& f, long long x);

}  // namespace polyctmc

#endif

#ifndef POLYCTMC_ASSUMPTIONS_HPP
#define POLYCTMC_ASSUMPTIONS_HPP

#include <array>
#include <optional>
#include <string>

#include "polyctmc/chain.hpp"

namespace polyctmc {

enum class AssumptionStatus { Verified, VerifiedUpToBound, Violated, NotChecked };

struct AssumptionEntry {
  AssumptionStatus status = AssumptionStatus::NotChecked;
  std::string detail;  // witness for violations, scope note otherwise
};

/// Decidable verification of the five regularity conditions a chain must
/// satisfy before the threshold parameters mean anything:
///   A1 both forward and backward jumps exist,
///   A2 finitely many backward jump sizes,
///   A3 finite mean absolute jump rate (declared law means),
///   A4 every tail rate strictly positive from the threshold on,
///   A5 the state space minus the absorbing set is one communicating class.
struct AssumptionReport {
  std::array<AssumptionEntry, 5> entries;  // index 0 = A1, ...
  long long positivity_bound = 0;
  long long reachability_cap = 0;

  const AssumptionEntry& a(int i) const { return entries.at(static_cast<size_t>(i) - 1); }
  bool all_ok() const {
    for (const auto& e : entries)
      if (e.status == AssumptionStatus::Violated) return false;
    return true;
  }
};

std::string to_string(AssumptionStatus s);

/// Checks A1-A5. A4 positivity is evaluated exactly at every integer in
/// [u, bound]; beyond the bound it is certified through the Cauchy root
/// bound of each rate polynomial when that is cheap, otherwise the status
/// degrades to verified-up-to-bound. A5 runs a reachability analysis on the
/// truncated state space [0, bound + max backward + max forward jump].
AssumptionReport check_assumptions(const ChainSpec& spec, long long positivity_bound);

/// Default positivity/reachability bound: u + 10 * (max finite jump size).
long long default_bound(const ChainSpec& spec);

struct AbsorptionDetection {
  std::set<long long> absorbing;  // trap states the main class can enter
  std::set<long long> excluded;   // trap states the main class can never enter
};

/// Splits the low states that cannot return to the unbounded communicating
/// class into a genuine absorbing set (reachable from the main class) and
/// excluded states (unreachable either way, hence not part of the chain).
AbsorptionDetection detect_absorption(const ChainSpec& raw, long long bound);

}  // namespace polyctmc

#endif

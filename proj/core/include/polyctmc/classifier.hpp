#ifndef POLYCTMC_CLASSIFIER_HPP
#define POLYCTMC_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyctmc/conditions.hpp"

namespace polyctmc {

enum class Truth { Holds, Fails, Unknown };

std::string to_string(Truth t);

struct Verdict {
  Truth value = Truth::Unknown;
  std::vector<int> conditions;  // fired conditions this verdict rests on
  std::string theorem;          // decision-rule citation for the report
  std::string note;             // names the gap for unknown verdicts
};

/// Hitting-time moment thresholds: E tau^eps is finite for 0 < eps <
/// exists_below (all eps when exists_all) and infinite for eps > fails_above.
/// Behaviour at the endpoints themselves is undecided.
struct MomentThresholds {
  bool exists_all = false;
  std::optional<Rational> exists_below;
  std::optional<Rational> fails_above;
  Truth first_moment = Truth::Unknown;
  std::string theorem;
  std::string note;
};

/// Three-valued long-run classification. Verdicts whose defining theorem
/// needs an empty (resp. non-empty) absorbing set are absent in the other
/// regime. The qsd verdict reads: holds = a unique uniformly exponentially
/// ergodic quasi-limiting distribution exists; fails = no quasi-stationary
/// distribution exists at all.
struct ClassificationReport {
  Verdict explosive;
  bool explosive_almost_surely = false;  // meaningful when explosive holds and no absorbing set
  std::optional<Verdict> recurrent;
  std::optional<Verdict> transient;
  std::optional<Verdict> certain_absorption;
  std::optional<Verdict> positive_recurrent;
  std::optional<Verdict> null_recurrent;
  std::optional<Verdict> exponentially_ergodic;
  std::optional<Verdict> qsd;
  std::optional<Verdict> implosive;
  std::optional<MomentThresholds> moments;
  std::optional<std::string> table1;
  bool used_infinite_jump_theorems = false;
};

/// Applies the decision theorems to the exact parameters. Finite jump sets
/// get the biconditional theorem family (verdicts are holds/fails except for
/// the documented QSD gap cases); infinite jump sets get the one-sided
/// family, with unknown verdicts whenever no sufficient condition fires.
ClassificationReport classify(const Parameters& p, bool has_absorbing);

/// Region of the parameter table for exact signs, e.g. "red (ES)",
/// "pink (ES/UQ)", "not possible". Finite jump sets only.
std::string table1_cell(const Parameters& p);

/// Same lookup from raw signs (each in {-1, 0, +1}); sign combinations that
/// no chain can realize (beta >= gamma, or R = 0 with gamma != 0 or
/// beta >= 0) return "not possible".
std::string table1_cell_for_signs(int R, int sign_alpha, int sign_beta, int sign_gamma);

}  // namespace polyctmc

#endif

#ifndef POLYCTMC_SIMULATE_HPP
#define POLYCTMC_SIMULATE_HPP

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyctmc/parameters.hpp"

namespace polyctmc {

struct SimConfig {
  long long x0 = 0;
  double t_max = std::numeric_limits<double>::infinity();
  long long max_jumps = 1'000'000;
  long long state_cap = 100'000;  // explosion proxy threshold
  long long trials = 1;
  uint64_t seed = 0;
  std::optional<std::set<long long>> target;  // hitting-time target set
  int threads = 1;                            // 0 = hardware concurrency
  bool record_occupation = true;              // per-trial + aggregate residence times
};

enum class EndReason { TMax, MaxJumps, StateCap, Absorbed, HitTarget };

std::string to_string(EndReason r);

struct TrialResult {
  EndReason end = EndReason::TMax;
  long long final_state = 0;
  double final_time = 0.0;
  long long jumps = 0;
  std::optional<double> hitting_time;  // present iff end is Absorbed or HitTarget
  bool neutral_stop = false;           // total rate vanished at a non-absorbing state
  std::map<long long, double> occupation;  // populated when record_occupation
};

struct BatchSummary {
  long long trials = 0;
  uint64_t seed = 0;
  long long count_tmax = 0, count_max_jumps = 0, count_state_cap = 0, count_absorbed = 0,
            count_hit_target = 0;
  double hit_fraction = 0.0;                      // absorbed or target hit
  std::optional<double> mean_hitting_time;
  std::optional<double> median_hitting_time;
  double mean_final_time = 0.0;
  double max_final_time = 0.0;
  long long total_jumps = 0;
  std::vector<std::pair<double, double>> survival;  // (t, empirical P(tau > t)) on a log grid
  std::map<long long, double> occupation;           // aggregate residence time per state
};

/// Exact-simulation batch. Trials are independent; each one's randomness is
/// a pure function of (seed, trial index), and all floating-point reductions
/// run over fixed trial-index chunks, so the batch is bit-identical for any
/// thread count.
struct TrialBatch {
  SimConfig config;
  std::vector<TrialResult> results;
  BatchSummary summary;
};

TrialBatch simulate(const ChainSpec& spec, const SimConfig& cfg);

/// CSV dump, one line per trial:
/// trial,end_reason,final_state,final_time,jump_count,hitting_time
std::string trials_csv(const TrialBatch& batch);

struct TailEstimate {
  bool ok = false;
  double exponent = 0.0;  // least-squares slope of log S(t) vs log t
  double ci_low = 0.0, ci_high = 0.0;
  int points = 0;
  double window_low = 0.0, window_high = 0.0;
  std::string note;
};

/// Slope of the hitting-time survival tail on a log-log scale, fitted over
/// the last well-populated decade of the Kaplan-Meier curve, with a
/// bootstrap confidence interval. Throws if fewer than 1000 trials
/// completed a hit; returns ok = false when the decay is too fast for any
/// power-law window (super-polynomial decay).
TailEstimate estimate_hitting_tail(const TrialBatch& batch);

enum class QfFamily { Pow, XOverLog, XLog, Log, LogLog };

std::string to_string(QfFamily f);
std::optional<QfFamily> qf_family_from_string(std::string_view name);

struct QfRow {
  long long x = 0;
  double exact = 0.0;      // generator applied to the test function
  double expansion = 0.0;  // two-term asymptotic value
  double rel_error = 0.0;
  bool order_only = false;  // expansion vanished; compare against the remainder order
  double order_ratio = 0.0;
};

/// Compares the exact generator application against its two-term asymptotic
/// expansion for the test-function family at each grid point. Families:
///   pow        f = x^d
///   x-over-log f = (x / log x)^d
///   x-log      f = (x log x)^d
///   log        f = (log x)^d
///   loglog     f = (log log x)^d
std::vector<QfRow> check_generator_expansion(const ChainSpec& spec, const Parameters& params,
                                             QfFamily family, double delta,
                                             const std::vector<long long>& grid);

}  // namespace polyctmc

#endif

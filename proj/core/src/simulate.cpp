#include "polyctmc/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "polyctmc/rng.hpp"

namespace polyctmc {

std::string to_string(EndReason r) {
  switch (r) {
    case EndReason::TMax:
      return "t_max";
    case EndReason::MaxJumps:
      return "max_jumps";
    case EndReason::StateCap:
      return "state_cap";
    case EndReason::Absorbed:
      return "absorbed";
    case EndReason::HitTarget:
      return "hit_target";
  }
  return "?";
}

namespace {

constexpr long long kChunk = 64;        // trials per reduction chunk
constexpr long long kCacheStates = 1 << 19;  // rate cache size per worker

// Per-state rates in floating point, cumulative for jump selection.
struct StateRates {
  bool filled = false;
  double total = 0.0;
  std::vector<double> cum;      // cumulative rates
  std::vector<int> omega;       // finite jump size, 0 for burst channels
  std::vector<int> channel;     // channel index, -1 for finite jumps
};

class RateTable {
 public:
  explicit RateTable(const ChainSpec& spec) : spec_(spec) {
    const auto* dk = spec.distribution_kernel();
    if (dk)
      for (const auto& ch : dk->channels) mass_ge1_.push_back(ch.law.mass_ge1());
  }

  const StateRates& at(long long x) {
    if (x < kCacheStates) {
      if (cache_.size() <= static_cast<size_t>(x)) cache_.resize(static_cast<size_t>(x) + 1);
      StateRates& sr = cache_[static_cast<size_t>(x)];
      if (!sr.filled) fill(x, sr);
      return sr;
    }
    fill(x, scratch_);
    return scratch_;
  }

 private:
  void fill(long long x, StateRates& sr) const {
    sr.cum.clear();
    sr.omega.clear();
    sr.channel.clear();
    double total = 0.0;
    for (const auto& [omega, rate] : spec_.finite_jump_rates(x)) {
      total += rate.to_double();
      sr.cum.push_back(total);
      sr.omega.push_back(omega);
      sr.channel.push_back(-1);
    }
    for (const auto& [m, base] : spec_.channel_bases(x)) {
      const double eff = base.to_double() * mass_ge1_[m];
      if (eff <= 0.0) continue;
      total += eff;
      sr.cum.push_back(total);
      sr.omega.push_back(0);
      sr.channel.push_back(static_cast<int>(m));
    }
    sr.total = total;
    sr.filled = true;
  }

  const ChainSpec& spec_;
  std::vector<double> mass_ge1_;
  std::vector<StateRates> cache_;
  mutable StateRates scratch_;
};

struct Kahan {
  double sum = 0.0, carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      carry += (sum - t) + v;
    else
      carry += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

// Membership test over a small sorted state set, with a cheap range reject.
struct SmallSet {
  std::vector<long long> states;
  long long lo = 1, hi = 0;

  explicit SmallSet(const std::set<long long>& s) : states(s.begin(), s.end()) {
    if (!states.empty()) {
      lo = states.front();
      hi = states.back();
    }
  }
  bool contains(long long x) const {
    return x >= lo && x <= hi && std::binary_search(states.begin(), states.end(), x);
  }
};

TrialResult run_trial(const ChainSpec& spec, const SimConfig& cfg, RateTable& rates,
                      const SmallSet& absorbing, const SmallSet& target, uint64_t trial) {
  const auto* dk = spec.distribution_kernel();
  RngStream rng(cfg.seed, trial);
  TrialResult res;
  long long x = cfg.x0;
  long long jumps = 0;
  Kahan t;

  auto occupy = [&](long long state, double dt) {
    if (cfg.record_occupation) res.occupation[state] += dt;
  };

  while (true) {
    // Arrival checks first: reaching the absorbing/target set or the state
    // cap on a jump outranks the jump budget.
    if (absorbing.contains(x)) {
      res.end = EndReason::Absorbed;
      res.hitting_time = t.value();
      break;
    }
    if (target.contains(x)) {
      res.end = EndReason::HitTarget;
      res.hitting_time = t.value();
      break;
    }
    if (x >= cfg.state_cap) {
      res.end = EndReason::StateCap;
      break;
    }
    if (jumps >= cfg.max_jumps) {
      res.end = EndReason::MaxJumps;
      break;
    }
    const StateRates& sr = rates.at(x);
    if (sr.total <= 0.0) {
      // Neutral state: nothing can fire, the trial is stuck for good.
      res.end = EndReason::Absorbed;
      res.hitting_time = t.value();
      res.neutral_stop = true;
      break;
    }
    rng.begin_jump(static_cast<uint64_t>(jumps));
    const double dt = rng.exponential(sr.total);
    if (t.value() + dt > cfg.t_max) {
      occupy(x, cfg.t_max - t.value());
      t = Kahan{};
      t.add(cfg.t_max);
      res.end = EndReason::TMax;
      break;
    }
    occupy(x, dt);
    t.add(dt);

    const double pick = rng.u01() * sr.total;
    size_t idx = 0;
    while (idx + 1 < sr.cum.size() && pick > sr.cum[idx]) ++idx;
    if (sr.channel[idx] >= 0) {
      x += dk->channels[static_cast<size_t>(sr.channel[idx])].law.sample_ge1(rng);
    } else {
      x += sr.omega[idx];
    }
    ++jumps;
  }
  res.final_state = x;
  res.final_time = t.value();
  res.jumps = jumps;
  return res;
}

// Per-chunk partial reductions, merged in chunk order so the batch summary
// is independent of how chunks were assigned to threads.
struct ChunkStats {
  long long counts[5] = {0, 0, 0, 0, 0};
  double hit_sum = 0.0;
  double final_time_sum = 0.0;
  double max_final_time = 0.0;
  long long total_jumps = 0;
  std::vector<double> hits;
  std::map<long long, double> occupation;
};

}  // namespace

TrialBatch simulate(const ChainSpec& spec, const SimConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.max_jumps < 1) throw std::invalid_argument("max_jumps must be >= 1");
  if (cfg.state_cap <= cfg.x0) throw std::invalid_argument("state_cap must exceed x0");
  if (!spec.in_state_space(cfg.x0))
    throw std::invalid_argument("x0 is not a state of this chain (excluded class)");

  TrialBatch batch;
  batch.config = cfg;
  batch.results.resize(static_cast<size_t>(cfg.trials));

  const long long nchunks = (cfg.trials + kChunk - 1) / kChunk;
  std::vector<ChunkStats> chunks(static_cast<size_t>(nchunks));

  int nthreads = cfg.threads;
  if (nthreads <= 0) nthreads = static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::max(1, std::min<int>(nthreads, static_cast<int>(nchunks)));

  const SmallSet absorbing(spec.absorbing_set());
  const SmallSet target(cfg.target ? *cfg.target : std::set<long long>{});

  std::atomic<long long> next_chunk{0};
  auto worker = [&] {
    RateTable rates(spec);
    while (true) {
      const long long ci = next_chunk.fetch_add(1);
      if (ci >= nchunks) break;
      ChunkStats& cs = chunks[static_cast<size_t>(ci)];
      const long long lo = ci * kChunk;
      const long long hi = std::min(cfg.trials, lo + kChunk);
      for (long long trial = lo; trial < hi; ++trial) {
        TrialResult r = run_trial(spec, cfg, rates, absorbing, target, static_cast<uint64_t>(trial));
        cs.counts[static_cast<int>(r.end)]++;
        cs.final_time_sum += r.final_time;
        cs.max_final_time = std::max(cs.max_final_time, r.final_time);
        cs.total_jumps += r.jumps;
        if (r.hitting_time) {
          cs.hit_sum += *r.hitting_time;
          cs.hits.push_back(*r.hitting_time);
        }
        if (cfg.record_occupation)
          for (const auto& [state, dt] : r.occupation) cs.occupation[state] += dt;
        batch.results[static_cast<size_t>(trial)] = std::move(r);
      }
    }
  };

  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Ordered reduction.
  BatchSummary& s = batch.summary;
  s.trials = cfg.trials;
  s.seed = cfg.seed;
  std::vector<double> hits;
  double hit_sum = 0.0, ft_sum = 0.0;
  for (const auto& cs : chunks) {
    s.count_tmax += cs.counts[0];
    s.count_max_jumps += cs.counts[1];
    s.count_state_cap += cs.counts[2];
    s.count_absorbed += cs.counts[3];
    s.count_hit_target += cs.counts[4];
    hit_sum += cs.hit_sum;
    ft_sum += cs.final_time_sum;
    s.max_final_time = std::max(s.max_final_time, cs.max_final_time);
    s.total_jumps += cs.total_jumps;
    hits.insert(hits.end(), cs.hits.begin(), cs.hits.end());
    for (const auto& [state, dt] : cs.occupation) s.occupation[state] += dt;
  }
  s.hit_fraction = static_cast<double>(hits.size()) / static_cast<double>(cfg.trials);
  s.mean_final_time = ft_sum / static_cast<double>(cfg.trials);
  if (!hits.empty()) {
    s.mean_hitting_time = hit_sum / static_cast<double>(hits.size());
    std::vector<double> sorted = hits;
    std::sort(sorted.begin(), sorted.end());
    s.median_hitting_time = sorted[sorted.size() / 2];
    // Empirical survival of tau on a log grid (censored trials count as
    // still alive; diagnostic only, the tail estimator uses Kaplan-Meier).
    const double lo = std::max(sorted.front(), 1e-12);
    const double hi = std::max(sorted.back(), lo * 1.0001);
    const int npts = 32;
    for (int i = 0; i < npts; ++i) {
      const double t = lo * std::pow(hi / lo, static_cast<double>(i) / (npts - 1));
      const auto it = std::upper_bound(sorted.begin(), sorted.end(), t);
      const long long alive =
          cfg.trials - static_cast<long long>(std::distance(sorted.begin(), it));
      s.survival.emplace_back(t, static_cast<double>(alive) / static_cast<double>(cfg.trials));
    }
  }
  return batch;
}

std::string trials_csv(const TrialBatch& batch) {
  std::string out = "trial,end_reason,final_state,final_time,jump_count,hitting_time\n";
  char buf[160];
  for (size_t i = 0; i < batch.results.size(); ++i) {
    const TrialResult& r = batch.results[i];
    if (r.hitting_time)
      std::snprintf(buf, sizeof buf, "%zu,%s,%lld,%.17g,%lld,%.17g\n", i,
                    to_string(r.end).c_str(), r.final_state, r.final_time, r.jumps,
                    *r.hitting_time);
    else
      std::snprintf(buf, sizeof buf, "%zu,%s,%lld,%.17g,%lld,\n", i, to_string(r.end).c_str(),
                    r.final_state, r.final_time, r.jumps);
    out += buf;
  }
  return out;
}

namespace {

// Kaplan-Meier product-limit estimator. Events: (time, is_hit).
struct KmCurve {
  std::vector<double> times;  // hit times in increasing order
  std::vector<double> surv;   // S(t) just after each hit time

  double at(double t) const {
    // S is a right-continuous step function dropping at hit times.
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    if (it == times.begin()) return 1.0;
    return surv[static_cast<size_t>(std::distance(times.begin(), it)) - 1];
  }
};

KmCurve kaplan_meier(std::vector<std::pair<double, bool>>& events) {
  std::sort(events.begin(), events.end());
  KmCurve km;
  double s = 1.0;
  double at_risk = static_cast<double>(events.size());
  size_t i = 0;
  while (i < events.size()) {
    const double t = events[i].first;
    long long deaths = 0, leaving = 0;
    while (i < events.size() && events[i].first == t) {
      deaths += events[i].second ? 1 : 0;
      ++leaving;
      ++i;
    }
    if (deaths > 0 && at_risk > 0) {
      s *= 1.0 - static_cast<double>(deaths) / at_risk;
      km.times.push_back(t);
      km.surv.push_back(s);
    }
    at_risk -= static_cast<double>(leaving);
  }
  return km;
}

double fit_loglog_slope(const KmCurve& km, double t_lo, double t_hi, int npts, int* used,
                        double* r_squared = nullptr) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  int n = 0;
  for (int i = 0; i < npts; ++i) {
    const double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (npts - 1));
    const double sv = km.at(t);
    if (sv <= 0.0) break;
    const double lx = std::log(t), ly = std::log(sv);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
    ++n;
  }
  if (used) *used = n;
  if (n < 3) return std::numeric_limits<double>::quiet_NaN();
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double slope = (n * sxy - sx * sy) / denom;
  if (r_squared) {
    const double ss_tot = syy - sy * sy / n;
    const double ss_res = ss_tot - slope * (sxy - sx * sy / n);
    *r_squared = ss_tot > 1e-12 ? 1.0 - ss_res / ss_tot : 1.0;
  }
  return slope;
}

}  // namespace

TailEstimate estimate_hitting_tail(const TrialBatch& batch) {
  std::vector<std::pair<double, bool>> events;
  events.reserve(batch.results.size());
  long long nhits = 0;
  for (const auto& r : batch.results) {
    if (r.hitting_time) {
      events.emplace_back(std::max(*r.hitting_time, 1e-300), true);
      ++nhits;
    } else {
      events.emplace_back(r.final_time, false);
    }
  }
  if (nhits < 1000)
    throw std::runtime_error("too few completed hitting times for a tail estimate (" +
                             std::to_string(nhits) + " < 1000)");

  TailEstimate est;
  auto base_events = events;
  const KmCurve km = kaplan_meier(events);
  if (km.times.empty()) {
    est.note = "no survival decay observed";
    return est;
  }

  // Fit window: the decade ending where the curve still rests on a solid
  // risk set. The quantile-based upper end keeps the noisy extreme tail out.
  std::vector<double> hit_times;
  for (const auto& [t, hit] : base_events)
    if (hit) hit_times.push_back(t);
  std::sort(hit_times.begin(), hit_times.end());
  const double t_hi = hit_times[static_cast<size_t>(0.999 * (hit_times.size() - 1))];
  const double t_lo = t_hi / 10.0;
  est.window_low = t_lo;
  est.window_high = t_hi;

  long long in_window = 0;
  for (double t : hit_times)
    if (t >= t_lo && t <= t_hi) ++in_window;
  if (t_lo <= hit_times.front() || in_window < 100 || km.at(t_hi) <= 0.0) {
    est.note = "insufficient tail spread for a power-law fit (super-polynomial decay or "
               "degenerate hitting times)";
    return est;
  }

  const int npts = 25;
  int used = 0;
  double r2 = 0.0;
  const double slope = fit_loglog_slope(km, t_lo, t_hi, npts, &used, &r2);
  if (!std::isfinite(slope)) {
    est.note = "survival curve vanished inside the fit window";
    return est;
  }
  if (r2 < 0.95) {
    est.note = "survival is not power-like over the fit window (fit R^2 " + std::to_string(r2) +
               "); decay is likely super-polynomial";
    est.exponent = slope;
    return est;
  }

  // Bootstrap over trials, same window.
  const int nboot = 200;
  std::vector<double> slopes;
  slopes.reserve(nboot);
  RngStream rng(batch.summary.seed ^ 0xb00757a9ULL, 0);
  std::vector<std::pair<double, bool>> sample(base_events.size());
  for (int b = 0; b < nboot; ++b) {
    rng.begin_jump(static_cast<uint64_t>(b));
    for (size_t i = 0; i < base_events.size(); ++i) {
      const size_t j = static_cast<size_t>(rng.u01() * static_cast<double>(base_events.size()));
      sample[i] = base_events[std::min(j, base_events.size() - 1)];
    }
    const KmCurve bkm = kaplan_meier(sample);
    const double bs = fit_loglog_slope(bkm, t_lo, t_hi, npts, nullptr);
    if (std::isfinite(bs)) slopes.push_back(bs);
  }
  std::sort(slopes.begin(), slopes.end());
  est.ok = true;
  est.exponent = slope;
  est.points = used;
  if (!slopes.empty()) {
    est.ci_low = slopes[static_cast<size_t>(0.025 * (slopes.size() - 1))];
    est.ci_high = slopes[static_cast<size_t>(0.975 * (slopes.size() - 1))];
  }
  return est;
}

std::string to_string(QfFamily f) {
  switch (f) {
    case QfFamily::Pow:
      return "pow";
    case QfFamily::XOverLog:
      return "x-over-log";
    case QfFamily::XLog:
      return "x-log";
    case QfFamily::Log:
      return "log";
    case QfFamily::LogLog:
      return "loglog";
  }
  return "?";
}

std::optional<QfFamily> qf_family_from_string(std::string_view name) {
  if (name == "pow") return QfFamily::Pow;
  if (name == "x-over-log") return QfFamily::XOverLog;
  if (name == "x-log") return QfFamily::XLog;
  if (name == "log") return QfFamily::Log;
  if (name == "loglog") return QfFamily::LogLog;
  return std::nullopt;
}

namespace {

double family_value(QfFamily f, double delta, double y) {
  switch (f) {
    case QfFamily::Pow:
      return delta == 0.0 ? 1.0 : std::pow(y, delta);
    case QfFamily::XOverLog:
      return std::pow(y / std::log(y), delta);
    case QfFamily::XLog:
      return std::pow(y * std::log(y), delta);
    case QfFamily::Log:
      return std::pow(std::log(y), delta);
    case QfFamily::LogLog:
      return std::pow(std::log(std::log(y)), delta);
  }
  return 0.0;
}

}  // namespace

std::vector<QfRow> check_generator_expansion(const ChainSpec& spec, const Parameters& params,
                                             QfFamily family, double delta,
                                             const std::vector<long long>& grid) {
  if (!params.beta || !params.vartheta)
    throw std::domain_error("generator expansion needs beta and vartheta");
  const double alpha = params.alpha.to_double();
  const double beta = params.beta->to_double();
  const double gamma = params.gamma.to_double();
  const double theta = params.vartheta->to_double();
  const int R = params.R;

  std::vector<QfRow> rows;
  for (long long x : grid) {
    if (x < 2) throw std::domain_error("expansion grid points must be >= 2");
    const double exact = apply_generator(
        spec, [&](long long y) { return family_value(family, delta, static_cast<double>(y)); }, x);

    const double xd = static_cast<double>(x);
    const double lx = std::log(xd);
    const double xr1 = std::pow(xd, R - 1), xr2 = std::pow(xd, R - 2);
    double prefactor = 0.0, bracket = 0.0, order = 0.0;
    switch (family) {
      case QfFamily::Pow:
        prefactor = delta * std::pow(xd, delta);
        bracket = alpha * xr1 + (beta + delta * theta) * xr2;
        order = std::pow(xd, R - 3);
        break;
      case QfFamily::XOverLog:
        prefactor = delta * std::pow(xd / lx, delta);
        bracket = alpha * (1.0 - 1.0 / lx) * xr1 +
                  ((beta + delta * theta) - (beta + 2.0 * delta * theta) / lx) * xr2;
        order = xr2 / (lx * lx);
        break;
      case QfFamily::XLog:
        prefactor = delta * std::pow(xd * lx, delta);
        bracket = alpha * (1.0 + 1.0 / lx) * xr1 + (beta + delta * theta) * xr2 +
                  (gamma + delta * theta) * xr2 / lx;
        order = xr2 / (lx * lx);
        break;
      case QfFamily::Log:
        prefactor = delta * std::pow(lx, delta - 1.0);
        bracket = alpha * xr1 + beta * xr2 + (delta - 1.0) * theta * xr2 / lx;
        order = std::pow(xd, R - 3);
        break;
      case QfFamily::LogLog:
        prefactor = delta * std::pow(std::log(lx), delta - 1.0) / lx;
        bracket = alpha * xr1 + beta * xr2 - theta * xr2 / lx;
        order = xr2 / (lx * lx * std::log(lx));
        break;
    }

    QfRow row;
    row.x = x;
    row.exact = exact;
    row.expansion = prefactor * bracket;
    if (row.expansion == 0.0 && exact == 0.0) {
      row.rel_error = 0.0;
    } else if (row.expansion == 0.0) {
      row.order_only = true;
      row.rel_error = std::numeric_limits<double>::quiet_NaN();
      const double scale = std::abs(prefactor) * order;
      row.order_ratio = scale > 0.0 ? std::abs(exact) / scale : std::numeric_limits<double>::infinity();
    } else {
      row.rel_error = std::abs(exact - row.expansion) / std::abs(row.expansion);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace polyctmc

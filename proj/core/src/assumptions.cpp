#include "polyctmc/assumptions.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <vector>

namespace polyctmc {

std::string to_string(AssumptionStatus s) {
  switch (s) {
    case AssumptionStatus::Verified:
      return "verified";
    case AssumptionStatus::VerifiedUpToBound:
      return "verified-up-to-bound";
    case AssumptionStatus::Violated:
      return "violated";
    case AssumptionStatus::NotChecked:
      return "not-checked";
  }
  return "?";
}

namespace {

// Extra integers evaluated past the requested bound while trying to reach a
// polynomial's positivity horizon exactly.
constexpr long long kHorizonBudget = 20000;

struct NamedPoly {
  std::string name;
  const Polynomial* poly;
};

std::vector<NamedPoly> tail_polynomials(const ChainSpec& spec) {
  std::vector<NamedPoly> out;
  const auto& rates = spec.finite_kernel() ? spec.finite_kernel()->rates : spec.distribution_kernel()->rates;
  for (const auto& [omega, poly] : rates)
    out.push_back({"lambda_" + std::to_string(omega), &poly});
  if (const auto* dk = spec.distribution_kernel())
    for (size_t m = 0; m < dk->channels.size(); ++m)
      out.push_back({"channel " + std::to_string(m) + " base", &dk->channels[m].base});
  return out;
}

// Reachability within [0, cap], ignoring excluded states.
std::vector<char> reachable_from(const ChainSpec& spec, const std::vector<long long>& starts,
                                 long long cap) {
  std::vector<char> seen(static_cast<size_t>(cap) + 1, 0);
  std::queue<long long> fifo;
  for (long long s : starts) {
    if (s >= 0 && s <= cap && spec.in_state_space(s) && !seen[static_cast<size_t>(s)]) {
      seen[static_cast<size_t>(s)] = 1;
      fifo.push(s);
    }
  }
  while (!fifo.empty()) {
    const long long x = fifo.front();
    fifo.pop();
    spec.neighbors(x, kLawTailEps, [&](long long y) {
      if (y >= 0 && y <= cap && spec.in_state_space(y) && !seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        fifo.push(y);
      }
    });
  }
  return seen;
}

// Strongly connected components over [0, cap] (excluded states skipped),
// iterative Tarjan. Returns component id per state, -1 for skipped.
std::vector<int> scc_ids(const ChainSpec& spec, long long cap) {
  const size_t n = static_cast<size_t>(cap) + 1;
  std::vector<std::vector<int>> adj(n);
  for (long long x = 0; x <= cap; ++x) {
    if (!spec.in_state_space(x)) continue;
    spec.neighbors(x, kLawTailEps, [&](long long y) {
      if (y >= 0 && y <= cap && spec.in_state_space(y)) adj[static_cast<size_t>(x)].push_back(static_cast<int>(y));
    });
  }

  std::vector<int> comp(n, -1), low(n, 0), idx(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    int v;
    size_t child;
  };
  for (long long root = 0; root <= cap; ++root) {
    if (!spec.in_state_space(root) || idx[static_cast<size_t>(root)] != -1) continue;
    std::vector<Frame> frames{{static_cast<int>(root), 0}};
    idx[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
    stack.push_back(static_cast<int>(root));
    on_stack[static_cast<size_t>(root)] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const size_t v = static_cast<size_t>(f.v);
      if (f.child < adj[v].size()) {
        const int w = adj[v][f.child++];
        const size_t ws = static_cast<size_t>(w);
        if (idx[ws] == -1) {
          idx[ws] = low[ws] = next_index++;
          stack.push_back(w);
          on_stack[ws] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[ws]) {
          low[v] = std::min(low[v], idx[ws]);
        }
      } else {
        if (low[v] == idx[v]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<size_t>(w)] = 0;
            comp[static_cast<size_t>(w)] = next_comp;
            if (w == f.v) break;
          }
          ++next_comp;
        }
        frames.pop_back();
        if (!frames.empty()) {
          const size_t p = static_cast<size_t>(frames.back().v);
          low[p] = std::min(low[p], low[v]);
        }
      }
    }
  }
  return comp;
}

}  // namespace

long long default_bound(const ChainSpec& spec) {
  const long long span = std::max<long long>(
      {spec.max_backward_jump(), spec.max_forward_jump_truncated(), 1});
  return spec.tail_threshold() + 10 * span;
}

AssumptionReport check_assumptions(const ChainSpec& spec, long long positivity_bound) {
  AssumptionReport rep;
  const long long u = spec.tail_threshold();
  rep.positivity_bound = std::max(positivity_bound, u);

  // A1: both jump directions present in the tail kernel.
  {
    bool fwd = false, bwd = false;
    const auto& rates =
        spec.finite_kernel() ? spec.finite_kernel()->rates : spec.distribution_kernel()->rates;
    for (const auto& [omega, poly] : rates) {
      (void)poly;
      (fwd |= omega > 0, bwd |= omega < 0);
    }
    if (const auto* dk = spec.distribution_kernel())
      if (!dk->channels.empty()) fwd = true;
    if (fwd && bwd) {
      rep.entries[0] = {AssumptionStatus::Verified, "forward and backward jumps present"};
    } else {
      rep.entries[0] = {AssumptionStatus::Violated,
                        fwd ? "no backward jumps (negative side empty)"
                            : "no forward jumps (positive side empty)"};
    }
  }

  // A2: finitely many backward jump sizes -- structural for these kernels.
  {
    size_t nneg = 0;
    const auto& rates =
        spec.finite_kernel() ? spec.finite_kernel()->rates : spec.distribution_kernel()->rates;
    for (const auto& [omega, poly] : rates) {
      (void)poly;
      if (omega < 0) ++nneg;
    }
    rep.entries[1] = {AssumptionStatus::Verified,
                      std::to_string(nneg) + " backward jump size(s), finite by construction"};
  }

  // A3: finite first moment of the jump rates; burst laws carry exact finite
  // means by construction, finite kernels are finite sums.
  rep.entries[2] = {AssumptionStatus::Verified,
                    spec.has_distribution_kernel()
                        ? "finite declared means for all burst laws"
                        : "finite jump set"};

  // A4: strict positivity of every tail rate polynomial on [u, infinity).
  {
    AssumptionEntry e{AssumptionStatus::Verified, ""};
    int max_degree = 0;
    for (const auto& np : tail_polynomials(spec)) {
      const Polynomial& p = *np.poly;
      if (p.is_zero()) {
        e = {AssumptionStatus::Violated, np.name + " is identically zero"};
        break;
      }
      max_degree = std::max(max_degree, p.degree());
      if (p.leading_coeffs().a.sign() < 0) {
        e = {AssumptionStatus::Violated, np.name + " has negative leading coefficient"};
        break;
      }
      const BigInt horizon = p.positivity_horizon();
      long long check_to = rep.positivity_bound;
      bool certified = horizon <= rep.positivity_bound;
      if (!certified && horizon <= rep.positivity_bound + kHorizonBudget) {
        check_to = horizon.convert_to<long long>();
        certified = true;
      }
      bool bad = false;
      for (long long x = u; x <= check_to; ++x) {
        if (p.eval(x).sign() <= 0) {
          e = {AssumptionStatus::Violated,
               np.name + "(" + std::to_string(x) + ") = " + p.eval(x).str() + " <= 0"};
          bad = true;
          break;
        }
      }
      if (bad) break;
      if (!certified && e.status == AssumptionStatus::Verified)
        e.status = AssumptionStatus::VerifiedUpToBound;
    }
    if (e.status == AssumptionStatus::Verified)
      e.detail = "all tail rates strictly positive (degree <= " + std::to_string(max_degree) + ")";
    else if (e.status == AssumptionStatus::VerifiedUpToBound)
      e.detail = "positive on [" + std::to_string(u) + ", " + std::to_string(rep.positivity_bound) +
                 "], horizon beyond evaluation budget";
    rep.entries[3] = e;
  }

  // A5: irreducibility of the state space minus the absorbing set, on a
  // truncated window.
  {
    const long long cap = rep.positivity_bound + spec.max_backward_jump() +
                          spec.max_forward_jump_truncated();
    rep.reachability_cap = cap;
    if (cap > 2'000'000) {
      rep.entries[4] = {AssumptionStatus::NotChecked, "reachability window too large"};
    } else {
      const std::vector<int> comp = scc_ids(spec, cap);
      const long long anchor = std::min(u + spec.max_backward_jump() + 1, cap);
      const int main_comp = comp[static_cast<size_t>(anchor)];
      AssumptionEntry e{AssumptionStatus::Verified,
                        "single communicating class on [0, " + std::to_string(cap) + "]"};
      // Every chain state up to the bound must sit in the main class.
      for (long long x = 0; x <= rep.positivity_bound; ++x) {
        if (!spec.in_state_space(x) || spec.absorbing_set().count(x)) continue;
        if (comp[static_cast<size_t>(x)] != main_comp) {
          e = {AssumptionStatus::Violated,
               "state " + std::to_string(x) + " does not communicate with the unbounded class"};
          break;
        }
      }
      // The main class must keep growing past the bound.
      if (e.status == AssumptionStatus::Verified) {
        bool above = false;
        for (long long x = rep.positivity_bound + 1; x <= cap && !above; ++x)
          if (spec.in_state_space(x) && comp[static_cast<size_t>(x)] == main_comp) above = true;
        if (!above)
          e = {AssumptionStatus::Violated, "communicating class does not extend above the bound"};
      }
      // Excluded states must be invisible from the chain.
      if (e.status == AssumptionStatus::Verified && !spec.excluded_states().empty()) {
        const auto seen = reachable_from(spec, {anchor}, cap);
        for (long long x : spec.excluded_states()) {
          if (x <= cap && seen[static_cast<size_t>(x)]) {
            e = {AssumptionStatus::Violated,
                 "excluded state " + std::to_string(x) + " is reachable from the chain"};
            break;
          }
        }
      }
      rep.entries[4] = e;
    }
  }

  return rep;
}

AbsorptionDetection detect_absorption(const ChainSpec& raw, long long bound) {
  AbsorptionDetection det;
  const long long u = raw.tail_threshold();
  const long long cap = std::max(bound, u) + raw.max_backward_jump() + raw.max_forward_jump_truncated();

  // Trap states: states below u from which no state >= u is reachable. From
  // u on, every jump is available (A4), so high states always communicate.
  std::vector<long long> traps;
  for (long long x = 0; x < u; ++x) {
    if (!raw.in_state_space(x)) continue;
    const auto seen = reachable_from(raw, {x}, cap);
    bool reaches_main = false;
    for (long long y = u; y <= cap && !reaches_main; ++y)
      if (seen[static_cast<size_t>(y)]) reaches_main = true;
    if (!reaches_main) traps.push_back(x);
  }
  if (traps.empty()) return det;

  const long long anchor = std::min(u + raw.max_backward_jump() + 1, cap);
  const auto from_main = reachable_from(raw, {anchor}, cap);
  for (long long x : traps) {
    if (from_main[static_cast<size_t>(x)])
      det.absorbing.insert(x);
    else
      det.excluded.insert(x);
  }
  return det;
}

}  // namespace polyctmc

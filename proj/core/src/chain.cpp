#include "polyctmc/chain.hpp"

#include <algorithm>
#include <cmath>

namespace polyctmc {

namespace {

void drop_zero_rates(std::map<int, Polynomial>& rates) {
  for (auto it = rates.begin(); it != rates.end();) {
    if (it->second.is_zero())
      it = rates.erase(it);
    else
      ++it;
  }
}

}  // namespace

ChainSpec::ChainSpec(FiniteKernel kernel, std::set<long long> absorbing, std::string label,
                     std::set<long long> excluded)
    : kernel_(std::move(kernel)),
      absorbing_(std::move(absorbing)),
      excluded_(std::move(excluded)),
      label_(std::move(label)) {
  drop_zero_rates(std::get<FiniteKernel>(kernel_).rates);
  validate();
}

ChainSpec::ChainSpec(DistributionKernel kernel, std::set<long long> absorbing, std::string label,
                     std::set<long long> excluded)
    : kernel_(std::move(kernel)),
      absorbing_(std::move(absorbing)),
      excluded_(std::move(excluded)),
      label_(std::move(label)) {
  drop_zero_rates(std::get<DistributionKernel>(kernel_).rates);
  validate();
}

void ChainSpec::validate() {
  const long long u = tail_threshold();
  if (u < 0) throw ModelError("tail threshold must be non-negative");

  auto check_overrides = [&](const std::map<StateJump, Rational>& ov) {
    for (const auto& [key, rate] : ov) {
      const auto& [x, omega] = key;
      if (x < 0 || x >= u) throw ModelError("override state must lie below the tail threshold");
      if (omega == 0) throw ModelError("override with zero jump size");
      if (rate.sign() < 0) throw ModelError("override rate must be non-negative");
      if (x + omega < 0 && rate.sign() > 0)
        throw ModelError("override jumps below state 0 with positive rate");
    }
  };

  if (const auto* fk = finite_kernel()) {
    if (fk->rates.count(0)) throw ModelError("jump size 0 is not a transition");
    check_overrides(fk->overrides);
  } else {
    const auto* dk = distribution_kernel();
    if (dk->rates.count(0)) throw ModelError("jump size 0 is not a transition");
    check_overrides(dk->overrides);
    for (const auto& [key, base] : dk->channel_overrides) {
      if (key.first < 0 || key.first >= u)
        throw ModelError("channel override state must lie below the tail threshold");
      if (key.second >= dk->channels.size()) throw ModelError("channel override index out of range");
      if (base.sign() < 0) throw ModelError("channel override base must be non-negative");
    }
  }

  for (long long x : absorbing_) {
    if (x < 0) throw ModelError("absorbing state must be non-negative");
    if (excluded_.count(x)) throw ModelError("state cannot be both absorbing and excluded");
  }

  // Closedness of the absorbing set: no positive rate from an absorbing
  // state to a state outside it.
  for (long long x : absorbing_) {
    for (const auto& [omega, rate] : finite_jump_rates(x)) {
      (void)rate;
      if (!absorbing_.count(x + omega))
        throw ModelError("absorbing set is not closed: state " + std::to_string(x) + " jumps to " +
                         std::to_string(x + omega));
    }
    if (!channel_bases(x).empty())
      throw ModelError("absorbing set is not closed: state " + std::to_string(x) +
                       " has positive burst rate");
  }
}

long long ChainSpec::tail_threshold() const {
  if (const auto* fk = finite_kernel()) return fk->tail_threshold;
  return distribution_kernel()->tail_threshold;
}

bool ChainSpec::support_finite() const {
  const auto* dk = distribution_kernel();
  if (!dk) return true;
  return std::all_of(dk->channels.begin(), dk->channels.end(),
                     [](const BurstChannel& c) { return c.law.finite_support(); });
}

std::vector<std::pair<int, Rational>> ChainSpec::finite_jump_rates(long long x) const {
  std::vector<std::pair<int, Rational>> out;
  const auto& rates = finite_kernel() ? finite_kernel()->rates : distribution_kernel()->rates;
  const auto& overrides = finite_kernel() ? finite_kernel()->overrides : distribution_kernel()->overrides;
  if (x >= tail_threshold()) {
    for (const auto& [omega, poly] : rates) {
      Rational r = poly.eval(x);
      if (r.sign() > 0) out.emplace_back(omega, std::move(r));
    }
  } else {
    for (const auto& [key, rate] : overrides) {
      if (key.first == x && rate.sign() > 0) out.emplace_back(key.second, rate);
    }
  }
  return out;
}

std::vector<std::pair<size_t, Rational>> ChainSpec::channel_bases(long long x) const {
  std::vector<std::pair<size_t, Rational>> out;
  const auto* dk = distribution_kernel();
  if (!dk) return out;
  if (x >= dk->tail_threshold) {
    for (size_t m = 0; m < dk->channels.size(); ++m) {
      Rational b = dk->channels[m].base.eval(x);
      if (b.sign() > 0) out.emplace_back(m, std::move(b));
    }
  } else {
    for (const auto& [key, base] : dk->channel_overrides) {
      if (key.first == x && base.sign() > 0) out.emplace_back(key.second, base);
    }
  }
  return out;
}

long long ChainSpec::max_backward_jump() const {
  long long m = 0;
  const auto& rates = finite_kernel() ? finite_kernel()->rates : distribution_kernel()->rates;
  for (const auto& [omega, poly] : rates) {
    (void)poly;
    if (omega < 0) m = std::max<long long>(m, -omega);
  }
  const auto& overrides = finite_kernel() ? finite_kernel()->overrides : distribution_kernel()->overrides;
  for (const auto& [key, rate] : overrides) {
    (void)rate;
    if (key.second < 0) m = std::max<long long>(m, -key.second);
  }
  return m;
}

long long ChainSpec::max_forward_jump_truncated(double eps) const {
  long long m = 0;
  const auto& rates = finite_kernel() ? finite_kernel()->rates : distribution_kernel()->rates;
  for (const auto& [omega, poly] : rates) {
    (void)poly;
    if (omega > 0) m = std::max<long long>(m, omega);
  }
  const auto& overrides = finite_kernel() ? finite_kernel()->overrides : distribution_kernel()->overrides;
  for (const auto& [key, rate] : overrides) {
    (void)rate;
    if (key.second > 0) m = std::max<long long>(m, key.second);
  }
  if (const auto* dk = distribution_kernel())
    for (const auto& ch : dk->channels) m = std::max(m, ch.law.truncation_point(eps));
  return m;
}

ChainSpec ChainSpec::scaled(const Rational& c) const {
  if (c.sign() <= 0) throw ModelError("rate scaling factor must be positive");
  auto scale_rates = [&](std::map<int, Polynomial>& rates) {
    for (auto& [omega, poly] : rates) poly = poly.scale(c);
  };
  auto scale_overrides = [&](std::map<StateJump, Rational>& ov) {
    for (auto& [key, rate] : ov) rate = rate * c;
  };
  if (const auto* fk = finite_kernel()) {
    FiniteKernel k = *fk;
    scale_rates(k.rates);
    scale_overrides(k.overrides);
    return ChainSpec(std::move(k), absorbing_, label_, excluded_);
  }
  DistributionKernel k = *distribution_kernel();
  scale_rates(k.rates);
  scale_overrides(k.overrides);
  for (auto& ch : k.channels) ch.base = ch.base.scale(c);
  for (auto& [key, base] : k.channel_overrides) base = base * c;
  return ChainSpec(std::move(k), absorbing_, label_, excluded_);
}

void ChainSpec::neighbors(long long x, double eps, const std::function<void(long long)>& visit) const {
  for (const auto& [omega, rate] : finite_jump_rates(x)) {
    (void)rate;
    if (x + omega >= 0) visit(x + omega);
  }
  const auto* dk = distribution_kernel();
  if (!dk) return;
  for (const auto& [m, base] : channel_bases(x)) {
    (void)base;
    const JumpLaw& law = dk->channels[m].law;
    const long long cap = law.truncation_point(eps);
    for (long long k = 1; k <= cap; ++k)
      if (law.pmf(k) > 0.0) visit(x + k);
  }
}

double apply_generator(const ChainSpec& spec, const std::function<double(long long)>& f, long long x) {
  if (x < 0) throw std::domain_error("generator applied at a negative state");
  auto fat = [&](long long y) {
    const double v = f(y);
    if (!std::isfinite(v))
      throw std::domain_error("test function is not finite at state " + std::to_string(y));
    return v;
  };
  const double fx = fat(x);
  double acc = 0.0;
  for (const auto& [omega, rate] : spec.finite_jump_rates(x)) {
    if (x + omega < 0) continue;  // never occurs for valid kernels; zero contribution
    acc += rate.to_double() * (fat(x + omega) - fx);
  }
  const auto* dk = spec.distribution_kernel();
  if (dk) {
    for (const auto& [m, base] : spec.channel_bases(x)) {
      const JumpLaw& law = dk->channels[m].law;
      const long long cap = law.truncation_point(kLawTailEps);
      double sum = 0.0;
      for (long long k = 1; k <= cap; ++k) {
        const double p = law.pmf(k);
        if (p > 0.0) sum += p * (fat(x + k) - fx);
      }
      acc += base.to_double() * sum;
    }
  }
  return acc;
}

}  // namespace polyctmc

#include "polyctmc/jump_law.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace polyctmc {

namespace {

// Shared storage for offspring-shifted laws over an infinite-support base.
// JumpLaw is copyable and immutable, so a shared const base is safe.
std::shared_ptr<const JumpLaw> clone(const JumpLaw& law) {
  return std::make_shared<const JumpLaw>(law);
}

Rational binomial(long long n, long long k) {
  if (k < 0 || k > n) return Rational();
  Rational r(1);
  for (long long i = 1; i <= k; ++i) r *= Rational(BigInt(n - k + i), BigInt(i));
  return r;
}

}  // namespace

JumpLaw JumpLaw::dirac(long long k) {
  if (k < 1) throw std::invalid_argument("dirac jump law needs k >= 1 (zero mean forbidden)");
  JumpLaw l;
  l.kind_ = Kind::Dirac;
  l.k_ = k;
  l.finalize();
  return l;
}

JumpLaw JumpLaw::geometric(const Rational& p) {
  if (p.sign() <= 0 || p >= Rational(1)) throw std::invalid_argument("geometric parameter must satisfy 0 < p < 1");
  JumpLaw l;
  l.kind_ = Kind::Geometric;
  l.p_ = p;
  l.finalize();
  return l;
}

JumpLaw JumpLaw::poisson(const Rational& lambda) {
  if (lambda.sign() <= 0) throw std::invalid_argument("poisson rate must be positive");
  JumpLaw l;
  l.kind_ = Kind::Poisson;
  l.p_ = lambda;
  l.finalize();
  return l;
}

JumpLaw JumpLaw::negative_binomial(long long r, const Rational& p) {
  if (r < 1) throw std::invalid_argument("negative binomial needs a positive integer r");
  if (p.sign() <= 0 || p >= Rational(1))
    throw std::invalid_argument("negative binomial parameter must satisfy 0 < p < 1");
  JumpLaw l;
  l.kind_ = Kind::NegativeBinomial;
  l.k_ = r;
  l.p_ = p;
  l.finalize();
  return l;
}

JumpLaw JumpLaw::finite_pmf(const std::map<long long, Rational>& pmf) {
  JumpLaw l;
  l.kind_ = Kind::FinitePmf;
  Rational total;
  for (const auto& [k, w] : pmf) {
    if (k < 0) throw std::invalid_argument("pmf support must be non-negative");
    if (w.sign() < 0) throw std::invalid_argument("pmf weights must be non-negative");
    if (w.sign() > 0) l.pmf_[k] = w;
    total += w;
  }
  if (total != Rational(1)) throw std::invalid_argument("pmf weights must sum to exactly 1");
  l.finalize();
  return l;
}

void JumpLaw::finalize() {
  switch (kind_) {
    case Kind::Dirac:
      mean_ = Rational(k_);
      second_moment_ = Rational(k_) * Rational(k_);
      finite_support_ = true;
      max_support_ = k_;
      mass_ge1_ = k_ >= 1 ? 1.0 : 0.0;
      break;
    case Kind::Geometric: {
      const Rational q = Rational(1) - p_;
      mean_ = p_ / q;
      second_moment_ = p_ * (Rational(1) + p_) / (q * q);
      finite_support_ = false;
      mass_ge1_ = p_.to_double();
      break;
    }
    case Kind::Poisson:
      mean_ = p_;
      second_moment_ = p_ + p_ * p_;
      finite_support_ = false;
      mass_ge1_ = 1.0 - std::exp(-p_.to_double());
      break;
    case Kind::NegativeBinomial: {
      const Rational q = Rational(1) - p_;
      const Rational r(k_);
      mean_ = r * p_ / q;
      second_moment_ = r * p_ * (Rational(1) + r * p_) / (q * q);
      finite_support_ = false;
      mass_ge1_ = 1.0 - std::pow(1.0 - p_.to_double(), static_cast<double>(k_));
      break;
    }
    case Kind::FinitePmf:
    case Kind::OffspringShift: {
      mean_ = Rational();
      second_moment_ = Rational();
      max_support_ = 0;
      Rational m1;
      for (const auto& [k, w] : pmf_) {
        mean_ += Rational(k) * w;
        second_moment_ += Rational(k) * Rational(k) * w;
        max_support_ = std::max(max_support_, k);
        if (k >= 1) m1 += w;
      }
      finite_support_ = true;
      mass_ge1_ = m1.to_double();
      if (mean_.sign() <= 0) throw std::invalid_argument("jump law must have positive mean");
      // Alias table over the k >= 1 masses.
      std::vector<std::pair<long long, double>> items;
      for (const auto& [k, w] : pmf_)
        if (k >= 1) items.emplace_back(k, (w / m1).to_double());
      const size_t n = items.size();
      alias_prob_.assign(n, 1.0);
      alias_val_.resize(n);
      alias_out_.resize(n);
      std::deque<size_t> small, large;
      std::vector<double> scaled(n);
      for (size_t i = 0; i < n; ++i) {
        alias_val_[i] = items[i].first;
        alias_out_[i] = items[i].first;
        scaled[i] = items[i].second * static_cast<double>(n);
        (scaled[i] < 1.0 ? small : large).push_back(i);
      }
      while (!small.empty() && !large.empty()) {
        const size_t s = small.front(), g = large.front();
        small.pop_front();
        alias_prob_[s] = scaled[s];
        alias_out_[s] = alias_val_[g];
        scaled[g] -= 1.0 - scaled[s];
        if (scaled[g] < 1.0) {
          large.pop_front();
          small.push_back(g);
        }
      }
      return;
    }
  }
  if (mean_.sign() <= 0) throw std::invalid_argument("jump law must have positive mean");
}

JumpLaw JumpLaw::offspring_shift() const {
  if (kind_ == Kind::OffspringShift) throw std::logic_error("offspring shift applied twice");
  const auto m0 = mass_at(0), m1 = mass_at(1);
  if (!m0 || !m1)
    throw std::invalid_argument("offspring law must have exact point masses at 0 and 1 (" + str() +
                                " does not)");
  if (*m0 + *m1 >= Rational(1))
    throw std::invalid_argument("offspring law puts no mass above 1; no forward jumps");

  if (finite_support_ || kind_ == Kind::Dirac) {
    std::map<long long, Rational> shifted;
    if ((*m0 + *m1).sign() > 0) shifted[0] = *m0 + *m1;
    if (kind_ == Kind::Dirac) {
      shifted[k_ - 1] = Rational(1);
    } else {
      for (const auto& [k, w] : pmf_)
        if (k >= 2) shifted[k - 1] = w;
    }
    JumpLaw l;
    l.kind_ = Kind::FinitePmf;
    l.pmf_ = std::move(shifted);
    l.finalize();
    return l;
  }

  JumpLaw l;
  l.kind_ = Kind::OffspringShift;
  l.k_ = k_;
  l.p_ = p_;
  l.base_ = clone(*this);
  l.mean_ = mean_ - Rational(1) + *m0;
  l.second_moment_ = second_moment_ - Rational(2) * mean_ + Rational(1) - *m0;
  l.finite_support_ = false;
  l.mass_ge1_ = 1.0 - (*m0 + *m1).to_double();
  if (l.mean_.sign() <= 0) throw std::invalid_argument("shifted offspring law has non-positive mean");
  return l;
}

std::optional<Rational> JumpLaw::mass_at(long long k) const {
  if (k < 0) return Rational();
  switch (kind_) {
    case Kind::Dirac:
      return k == k_ ? Rational(1) : Rational();
    case Kind::Geometric:
      return (Rational(1) - p_) * pow(p_, static_cast<unsigned>(k));
    case Kind::Poisson:
      return std::nullopt;
    case Kind::NegativeBinomial:
      return binomial(k + k_ - 1, k) * pow(Rational(1) - p_, static_cast<unsigned>(k_)) *
             pow(p_, static_cast<unsigned>(k));
    case Kind::FinitePmf: {
      auto it = pmf_.find(k);
      return it == pmf_.end() ? Rational() : it->second;
    }
    case Kind::OffspringShift: {
      if (k == 0) {
        auto m0 = base_->mass_at(0), m1 = base_->mass_at(1);
        if (!m0 || !m1) return std::nullopt;
        return *m0 + *m1;
      }
      return base_->mass_at(k + 1);
    }
  }
  return std::nullopt;
}

double JumpLaw::pmf(long long k) const {
  if (k < 0) return 0.0;
  switch (kind_) {
    case Kind::Dirac:
      return k == k_ ? 1.0 : 0.0;
    case Kind::Geometric:
      return (1.0 - p_.to_double()) * std::pow(p_.to_double(), static_cast<double>(k));
    case Kind::Poisson: {
      const double lam = p_.to_double();
      return std::exp(-lam + static_cast<double>(k) * std::log(lam) - std::lgamma(static_cast<double>(k) + 1.0));
    }
    case Kind::NegativeBinomial: {
      const double p = p_.to_double(), r = static_cast<double>(k_), kk = static_cast<double>(k);
      return std::exp(std::lgamma(kk + r) - std::lgamma(kk + 1.0) - std::lgamma(r) +
                      r * std::log1p(-p) + kk * std::log(p));
    }
    case Kind::FinitePmf: {
      auto it = pmf_.find(k);
      return it == pmf_.end() ? 0.0 : it->second.to_double();
    }
    case Kind::OffspringShift:
      if (k == 0) return base_->pmf(0) + base_->pmf(1);
      return base_->pmf(k + 1);
  }
  return 0.0;
}

long long JumpLaw::truncation_point(double eps) const {
  switch (kind_) {
    case Kind::Dirac:
      return k_;
    case Kind::FinitePmf:
      return max_support_;
    case Kind::Geometric: {
      // tail(K) = p^(K+1)
      const double lp = std::log(p_.to_double());
      return std::max<long long>(1, static_cast<long long>(std::ceil(std::log(eps) / lp)));
    }
    case Kind::OffspringShift:
      return std::max<long long>(1, base_->truncation_point(eps) - 1);
    case Kind::Poisson:
    case Kind::NegativeBinomial: {
      double cum = 0.0;
      for (long long k = 0; k < 2'000'000; ++k) {
        cum += pmf(k);
        if (1.0 - cum < eps) return std::max<long long>(1, k);
      }
      throw std::runtime_error("jump law tail did not reach truncation threshold");
    }
  }
  return max_support_;
}

long long JumpLaw::sample_ge1(RngStream& rng) const {
  switch (kind_) {
    case Kind::Dirac:
      return k_;
    case Kind::Geometric: {
      // Memorylessness: Z conditioned on Z >= 1 is 1 + geometric.
      const double u = rng.u01();
      const double g = std::floor(std::log(u) / std::log(p_.to_double()));
      return 1 + std::max<long long>(0, static_cast<long long>(g));
    }
    case Kind::Poisson:
    case Kind::NegativeBinomial: {
      // Sequential inversion with rejection of zero draws.
      for (int attempt = 0; attempt < 4096; ++attempt) {
        double u = rng.u01();
        double mass = pmf(0);
        long long k = 0;
        while (u > mass && k < 2'000'000) {
          ++k;
          mass += pmf(k);
        }
        if (k >= 1) return k;
      }
      throw std::runtime_error("jump law rejection sampling failed to produce k >= 1");
    }
    case Kind::FinitePmf: {
      const size_t n = alias_prob_.size();
      const double u = rng.u01() * static_cast<double>(n);
      size_t slot = std::min(n - 1, static_cast<size_t>(u));
      const double frac = u - static_cast<double>(slot);
      return frac < alias_prob_[slot] ? alias_val_[slot] : alias_out_[slot];
    }
    case Kind::OffspringShift: {
      for (int attempt = 0; attempt < 4096; ++attempt) {
        const long long z = base_->sample_ge1(rng);
        if (z >= 2) return z - 1;
      }
      throw std::runtime_error("offspring-shift rejection sampling failed to produce k >= 1");
    }
  }
  throw std::logic_error("unreachable jump law kind");
}

std::string JumpLaw::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Dirac:
      os << "dirac(" << k_ << ")";
      break;
    case Kind::Geometric:
      os << "geom(" << p_.str() << ")";
      break;
    case Kind::Poisson:
      os << "poisson(" << p_.str() << ")";
      break;
    case Kind::NegativeBinomial:
      os << "negbin(" << k_ << "," << p_.str() << ")";
      break;
    case Kind::FinitePmf: {
      os << "pmf{";
      bool first = true;
      for (const auto& [k, w] : pmf_) {
        if (!first) os << ",";
        os << k << ":" << w.str();
        first = false;
      }
      os << "}";
      break;
    }
    case Kind::OffspringShift:
      os << "offspring_shift(" << base_->str() << ")";
      break;
  }
  return os.str();
}

JumpLaw JumpLaw::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto fail = [&] { throw std::invalid_argument("bad jump law literal '" + std::string(text) + "'"); };

  auto args_of = [&](std::string_view head) -> std::string {
    if (s.size() < head.size() + 2 || s.compare(0, head.size(), head) != 0) return {};
    if (s[head.size()] != '(' || s.back() != ')') return {};
    return s.substr(head.size() + 1, s.size() - head.size() - 2);
  };

  if (auto a = args_of("dirac"); !a.empty()) return dirac(std::stoll(a));
  if (auto a = args_of("geom"); !a.empty()) return geometric(Rational::parse(a));
  if (auto a = args_of("poisson"); !a.empty()) return poisson(Rational::parse(a));
  if (auto a = args_of("negbin"); !a.empty()) {
    auto comma = a.find(',');
    if (comma == std::string::npos) fail();
    return negative_binomial(std::stoll(a.substr(0, comma)), Rational::parse(a.substr(comma + 1)));
  }
  if (s.rfind("pmf{", 0) == 0 && s.back() == '}') {
    std::map<long long, Rational> pm;
    std::string body = s.substr(4, s.size() - 5);
    size_t pos = 0;
    while (pos < body.size()) {
      size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      std::string entry = body.substr(pos, comma - pos);
      size_t colon = entry.find(':');
      if (colon == std::string::npos) fail();
      pm[std::stoll(entry.substr(0, colon))] = Rational::parse(entry.substr(colon + 1));
      pos = comma + 1;
    }
    if (pm.empty()) fail();
    return finite_pmf(pm);
  }
  fail();
  return dirac(1);  // unreachable
}

}  // namespace polyctmc

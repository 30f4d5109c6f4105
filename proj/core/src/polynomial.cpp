#include "polyctmc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace polyctmc {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
  if (degree() > kMaxDegree) throw std::invalid_argument("polynomial degree exceeds cap of 64");
}

Polynomial Polynomial::constant(Rational c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(int degree, Rational c) {
  if (degree < 0) throw std::invalid_argument("monomial with negative degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::descending_factorial(int n) {
  if (n < 0) throw std::invalid_argument("descending factorial of negative order");
  Polynomial p = constant(1);
  for (int i = 0; i < n; ++i) {
    // p *= (x - i)
    p = p * Polynomial({Rational(-i), Rational(1)});
  }
  return p;
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational();
  return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::eval(const BigInt& x) const {
  Rational acc;
  Rational rx{Rational(x)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * rx + *it;
  return acc;
}

double Polynomial::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(-c);
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < p.coeffs_.size()) v[i] += p.coeffs_[i];
    if (i < q.coeffs_.size()) v[i] += q.coeffs_[i];
  }
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (size_t i = 0; i < p.coeffs_.size(); ++i)
    for (size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scale(const Rational& c) const {
  if (c.is_zero()) return Polynomial();
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& k : coeffs_) v.push_back(k * c);
  return Polynomial(std::move(v));
}

LeadingCoeffs Polynomial::leading_coeffs() const {
  if (is_zero()) throw std::domain_error("no leading coefficient");
  LeadingCoeffs lc;
  lc.degree = degree();
  lc.a = coeffs_.back();
  lc.b = lc.degree >= 1 ? coeffs_[static_cast<size_t>(lc.degree) - 1] : Rational();
  return lc;
}

BigInt Polynomial::positivity_horizon() const {
  if (is_zero()) return 0;
  // Cauchy bound: all real roots lie in |x| <= 1 + max_i |c_i| / |c_d|.
  Rational lead = coeffs_.back().abs();
  Rational m;
  for (size_t i = 0; i + 1 < coeffs_.size(); ++i) m = std::max(m, coeffs_[i].abs());
  Rational bound = Rational(1) + m / lead;
  BigInt b = bound.numerator() / bound.denominator() + 1;
  return b;
}

Polynomial Polynomial::parse(std::string_view text) {
  // term := [sign] [coeff] [('x' | '*x') ['^' int]]
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial '" + std::string(text) + "': " + why);
  };

  std::vector<Rational> coeffs;
  auto bump = [&](int d, const Rational& c) {
    if (d > kMaxDegree) fail("degree exceeds cap of 64");
    if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(static_cast<size_t>(d) + 1);
    coeffs[static_cast<size_t>(d)] += c;
  };

  skip_ws();
  if (i == text.size()) fail("empty");
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    if (i == text.size()) fail("dangling sign");

    // Optional numeric coefficient.
    bool have_coeff = false;
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.') {
      size_t start = i;
      while (i < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.' || text[i] == '/'))
        ++i;
      c = Rational::parse(text.substr(start, i - start));
      have_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }

    int deg = 0;
    if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
      ++i;
      deg = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail("missing exponent");
        deg = std::stoi(std::string(text.substr(start, i - start)));
      }
    } else if (!have_coeff) {
      fail("expected coefficient or 'x'");
    }
    bump(deg, sign < 0 ? -c : c);
    first = false;
    skip_ws();
  }
  return Polynomial(std::move(coeffs));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational c = coeff(d);
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (lead) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = a == Rational(1);
    if (d == 0 || !unit) os << a.str();
    if (d >= 1) {
      os << "x";
      if (d > 1) os << "^" << d;
    }
    lead = false;
  }
  return os.str();
}

}  // namespace polyctmc

#include "polyctmc/rational.hpp"

#include <cctype>

namespace polyctmc {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::invalid_argument("rational with zero denominator");
  value_ = BigRational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("sign without digits in rational literal");

  auto bad = [&] { throw std::invalid_argument("bad rational literal '" + std::string(text) + "'"); };

  // Fraction form p/q.
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad();
    BigInt n{std::string(num)}, d{std::string(den)};
    if (d.is_zero()) bad();
    Rational r(n, d);
    return negative ? -r : r;
  }

  // Decimal form with optional exponent: d[.d][e[+-]d].
  std::string_view mantissa = s;
  long long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view es = s.substr(e + 1);
    bool eneg = false;
    if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
      eneg = es.front() == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6) bad();
    exp10 = std::stoll(std::string(es));
    if (eneg) exp10 = -exp10;
  }

  std::string digits;
  long long frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot), fp = mantissa.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad();
    if (!ip.empty() && !all_digits(ip)) bad();
    if (!fp.empty() && !all_digits(fp)) bad();
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long long>(fp.size());
  } else {
    if (!all_digits(mantissa)) bad();
    digits = std::string(mantissa);
  }
  if (digits.empty()) bad();

  BigInt n{digits};
  long long net = exp10 - frac_len;
  BigInt num = n, den = 1;
  if (net >= 0)
    num *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(net));
  else
    den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-net));
  Rational r(num, den);
  return negative ? -r : r;
}

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::str_pq() const { return numerator().str() + "/" + denominator().str(); }

}  // namespace polyctmc

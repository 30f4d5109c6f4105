#ifndef POLYCTMC_POLYNOMIAL_HPP
#define POLYCTMC_POLYNOMIAL_HPP

#include <limits>
#include <vector>

#include "polyctmc/rational.hpp"

namespace polyctmc {

struct LeadingCoeffs {
  int degree = 0;
  Rational a;  // coefficient of x^degree
  Rational b;  // coefficient of x^(degree-1), zero for constants
};

/// Univariate polynomial with exact rational coefficients in the power basis.
/// Coefficient i multiplies x^i; the top coefficient is nonzero unless the
/// polynomial is zero. Immutable after construction.
class Polynomial {
 public:
  static constexpr int kMaxDegree = 64;
  /// Degree sentinel of the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;  // zero polynomial
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(Rational c);
  static Polynomial monomial(int degree, Rational c);
  /// x(x-1)...(x-n+1) expanded into the power basis; the coefficients are the
  /// signed Stirling numbers of the first kind. n = 0 gives 1.
  static Polynomial descending_factorial(int n);
  /// Parses expressions like "x^2 - 3x + 1/2" or "0.5x^3".
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i (zero beyond the degree, and for i < 0).
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const BigInt& x) const;
  Rational eval(long long x) const { return eval(BigInt(x)); }
  double eval_double(double x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial scale(const Rational& c) const;

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

  /// (degree, leading, subleading). Throws std::domain_error for the zero
  /// polynomial ("no leading coefficient").
  LeadingCoeffs leading_coeffs() const;

  /// Smallest integer C such that the sign of the polynomial at every real
  /// x >= C equals the sign of the leading coefficient (Cauchy root bound).
  /// Zero polynomial yields 0.
  BigInt positivity_horizon() const;

  std::string str() const;  // e.g. "2x^3 - 4x^2 + 3x"

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace polyctmc

#endif

#include <doctest.h>

#include <random>

#include "polyctmc/polynomial.hpp"

using namespace polyctmc;

namespace {

Polynomial poly(std::initializer_list<long long> coeffs) {
  std::vector<Rational> v;
  for (long long c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

// Independent oracle for the descending factorial: the iterative product.
Rational falling_product(long long x, int n) {
  Rational acc(1);
  for (int i = 0; i < n; ++i) acc *= Rational(x - i);
  return acc;
}

std::mt19937 gen(2024);

Polynomial random_poly(int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long long> num(-9, 9), den(1, 5);
  std::vector<Rational> v(static_cast<size_t>(deg(gen)) + 1);
  for (auto& c : v) c = Rational(BigInt(num(gen)), BigInt(den(gen)));
  return Polynomial(std::move(v));
}

}  // namespace

TEST_CASE("evaluation") {
  CHECK(poly({0, 2, -3, 1}).eval(4) == Rational(24));  // x^3-3x^2+2x at 4
  CHECK(Polynomial().eval(1'000'000) == Rational(0));
  CHECK(poly({0, -2, 2}).eval(3) == Rational(12));  // 2x^2-2x at 3
}

TEST_CASE("add, scale, trimming") {
  CHECK((poly({0, 1}) + poly({0, -1})).is_zero());
  CHECK(poly({0, -1, 1}).scale(Rational(2)) == poly({0, -2, 2}));
  // 2S->3S at rate 4 plus S->2S at rate 1: 4x(x-1) + x = 4x^2 - 3x
  const Polynomial sum = Polynomial::descending_factorial(2).scale(Rational(4)) +
                         Polynomial::descending_factorial(1);
  CHECK(sum == poly({0, -3, 4}));
  CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
}

TEST_CASE("descending factorial expansion") {
  CHECK(Polynomial::descending_factorial(0) == poly({1}));
  CHECK(Polynomial::descending_factorial(3) == poly({0, 2, -3, 1}));
  CHECK(Polynomial::descending_factorial(5).eval(7) == Rational(2520));
  CHECK(Polynomial::descending_factorial(5).eval(7) == falling_product(7, 5));
}

TEST_CASE("basis-conversion oracle: all n <= 12, x <= 50") {
  for (int n = 0; n <= 12; ++n) {
    const Polynomial p = Polynomial::descending_factorial(n);
    for (long long x = 0; x <= 50; ++x) CHECK(p.eval(x) == falling_product(x, n));
  }
}

TEST_CASE("leading coefficients") {
  const auto lc = Polynomial::descending_factorial(4).leading_coeffs();
  CHECK(lc.degree == 4);
  CHECK(lc.a == Rational(1));
  CHECK(lc.b == Rational(-6));

  const auto linear = poly({0, 3}).leading_coeffs();
  CHECK(linear.degree == 1);
  CHECK(linear.a == Rational(3));
  CHECK(linear.b == Rational(0));

  const auto constant = poly({7}).leading_coeffs();
  CHECK(constant.degree == 0);
  CHECK(constant.a == Rational(7));
  CHECK(constant.b == Rational(0));

  CHECK_THROWS_WITH_AS(Polynomial().leading_coeffs(), "no leading coefficient", std::domain_error);
}

TEST_CASE("degree cap") {
  CHECK_NOTHROW(Polynomial::monomial(64, Rational(1)));
  CHECK_THROWS_AS(Polynomial::monomial(65, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::descending_factorial(65), std::invalid_argument);
}

TEST_CASE("ring axioms and eval homomorphism on random polynomials") {
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = random_poly(8), q = random_poly(8), r = random_poly(8);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    const Rational c(BigInt(i % 7 - 3), BigInt(2));
    CHECK((p + q).scale(c) == p.scale(c) + q.scale(c));
    const BigInt x(i % 23);
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
  }
}

TEST_CASE("leading coefficients add for equal degrees with non-cancelling leads") {
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(6), q = random_poly(6);
    if (p.is_zero() || q.is_zero() || p.degree() != q.degree()) continue;
    if ((p.leading_coeffs().a + q.leading_coeffs().a).is_zero()) continue;
    const auto lc = (p + q).leading_coeffs();
    CHECK(lc.a == p.leading_coeffs().a + q.leading_coeffs().a);
    CHECK(lc.b == p.leading_coeffs().b + q.leading_coeffs().b);
  }
}

TEST_CASE("expression parsing") {
  CHECK(Polynomial::parse("x^2 - 3x + 1/2") ==
        Polynomial({Rational(BigInt(1), BigInt(2)), Rational(-3), Rational(1)}));
  CHECK(Polynomial::parse("0.5x^3") == Polynomial({Rational(0), Rational(0), Rational(0),
                                                   Rational(BigInt(1), BigInt(2))}));
  CHECK(Polynomial::parse("2*x") == poly({0, 2}));
  CHECK(Polynomial::parse("7") == poly({7}));
  CHECK_THROWS_AS(Polynomial::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::parse("x +"), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::parse("y"), std::invalid_argument);
}

TEST_CASE("positivity horizon bounds all real roots") {
  const Polynomial p = poly({-10, 1});  // x - 10
  CHECK(p.positivity_horizon() >= 10);
  for (int i = 0; i < 50; ++i) {
    Polynomial q = random_poly(5);
    if (q.is_zero()) continue;
    const BigInt h = q.positivity_horizon();
    const int lead_sign = q.leading_coeffs().a.sign();
    CHECK(q.eval(h).sign() == lead_sign);
    CHECK(q.eval(h + 17).sign() == lead_sign);
  }
}

TEST_CASE("rendering") {
  CHECK(poly({0, 3, -4, 2}).str() == "2x^3 - 4x^2 + 3x");
  CHECK(Polynomial().str() == "0");
  CHECK(poly({-1}).str() == "-1");
}

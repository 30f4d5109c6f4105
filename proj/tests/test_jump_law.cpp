#include <doctest.h>

#include "polyctmc/jump_law.hpp"

using namespace polyctmc;

namespace {
Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("dirac") {
  const JumpLaw d = JumpLaw::dirac(2);
  CHECK(d.mean() == rat(2));
  CHECK(d.second_moment() == rat(4));
  CHECK(*d.mass_at(0) == rat(0));
  CHECK(*d.mass_at(2) == rat(1));
  CHECK(d.finite_support());
  CHECK_THROWS_AS(JumpLaw::dirac(0), std::invalid_argument);
}

TEST_CASE("geometric moments and masses") {
  const JumpLaw g = JumpLaw::geometric(rat(1, 2));
  CHECK(g.mean() == rat(1));
  CHECK(g.second_moment() == rat(3));
  CHECK(*g.mass_at(0) == rat(1, 2));
  CHECK(*g.mass_at(2) == rat(1, 8));
  CHECK_FALSE(g.finite_support());
  CHECK_THROWS_AS(JumpLaw::geometric(rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(JumpLaw::geometric(rat(0)), std::invalid_argument);
}

TEST_CASE("poisson moments; point masses are not rational") {
  const JumpLaw p = JumpLaw::poisson(rat(3));
  CHECK(p.mean() == rat(3));
  CHECK(p.second_moment() == rat(12));
  CHECK_FALSE(p.mass_at(0).has_value());
  CHECK(p.pmf(0) == doctest::Approx(std::exp(-3.0)));
}

TEST_CASE("negative binomial moments") {
  const JumpLaw nb = JumpLaw::negative_binomial(2, rat(1, 3));
  CHECK(nb.mean() == rat(1));
  CHECK(nb.second_moment() == rat(5, 2));
  CHECK(*nb.mass_at(0) == rat(4, 9));
  CHECK(*nb.mass_at(1) == rat(8, 27));
  CHECK_THROWS_AS(JumpLaw::negative_binomial(0, rat(1, 2)), std::invalid_argument);
}

TEST_CASE("explicit pmf validation") {
  CHECK_THROWS_AS(JumpLaw::finite_pmf({{0, rat(1, 2)}, {2, rat(1, 3)}}), std::invalid_argument);
  CHECK_THROWS_AS(JumpLaw::finite_pmf({{0, rat(1)}}), std::invalid_argument);  // zero mean
  CHECK_THROWS_AS(JumpLaw::finite_pmf({{1, rat(3, 2)}, {2, rat(-1, 2)}}), std::invalid_argument);
  const JumpLaw w = JumpLaw::finite_pmf({{0, rat(1, 4)}, {1, rat(1, 4)}, {3, rat(1, 2)}});
  CHECK(w.mean() == rat(7, 4));
  CHECK(w.second_moment() == rat(19, 4));
  CHECK(w.max_support() == 3);
}

TEST_CASE("pmf mass accumulates to one under truncation") {
  for (const JumpLaw& law :
       {JumpLaw::geometric(rat(2, 3)), JumpLaw::poisson(rat(5, 2)),
        JumpLaw::negative_binomial(3, rat(1, 4)),
        JumpLaw::finite_pmf({{1, rat(1, 3)}, {4, rat(2, 3)}})}) {
    const long long cap = law.truncation_point(1e-12);
    double mass = 0.0;
    for (long long k = 0; k <= cap; ++k) mass += law.pmf(k);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("offspring shift moments") {
  // E_sigma = E - 1 + mu(0); E2_sigma = E2 - 2E + 1 - mu(0).
  const JumpLaw g = JumpLaw::geometric(rat(1, 2)).offspring_shift();
  CHECK(g.mean() == rat(1, 2));
  CHECK(g.second_moment() == rat(3, 2));
  CHECK(*g.mass_at(0) == rat(3, 4));
  CHECK(*g.mass_at(1) == rat(1, 8));

  const JumpLaw w =
      JumpLaw::finite_pmf({{0, rat(1, 4)}, {1, rat(1, 4)}, {3, rat(1, 2)}}).offspring_shift();
  CHECK(*w.mass_at(0) == rat(1, 2));
  CHECK(*w.mass_at(2) == rat(1, 2));
  CHECK(w.mean() == rat(1));

  CHECK_THROWS_AS(JumpLaw::poisson(rat(1)).offspring_shift(), std::invalid_argument);
  CHECK_THROWS_AS(JumpLaw::dirac(1).offspring_shift(), std::invalid_argument);
}

TEST_CASE("conditional sampling matches conditional means") {
  RngStream rng(123, 0);
  auto sample_mean = [&](const JumpLaw& law, int n) {
    double acc = 0;
    for (int i = 0; i < n; ++i) {
      rng.begin_jump(static_cast<uint64_t>(i));
      acc += static_cast<double>(law.sample_ge1(rng));
    }
    return acc / n;
  };
  // geometric(1/2) given Z >= 1: mean 2.
  CHECK(sample_mean(JumpLaw::geometric(rat(1, 2)), 40000) == doctest::Approx(2.0).epsilon(0.03));
  // poisson(2) given Z >= 1: mean 2 / (1 - e^-2).
  CHECK(sample_mean(JumpLaw::poisson(rat(2)), 40000) ==
        doctest::Approx(2.0 / (1.0 - std::exp(-2.0))).epsilon(0.03));
  // alias-table law:
  const JumpLaw w = JumpLaw::finite_pmf({{1, rat(1, 4)}, {2, rat(1, 4)}, {5, rat(1, 2)}});
  CHECK(sample_mean(w, 40000) == doctest::Approx(3.25).epsilon(0.03));
}

TEST_CASE("literal parsing round trip") {
  for (const char* lit :
       {"dirac(2)", "geom(1/2)", "poisson(3)", "negbin(2,1/3)", "pmf{0:1/4,2:3/4}"}) {
    const JumpLaw law = JumpLaw::parse(lit);
    const JumpLaw again = JumpLaw::parse(law.str());
    CHECK(again.mean() == law.mean());
    CHECK(again.second_moment() == law.second_moment());
  }
  CHECK_THROWS_AS(JumpLaw::parse("gamma(2)"), std::invalid_argument);
  CHECK_THROWS_AS(JumpLaw::parse("pmf{}"), std::invalid_argument);
}

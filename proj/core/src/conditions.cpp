#include "polyctmc/conditions.hpp"

namespace polyctmc {

ConditionSet evaluate_conditions(int R, const Rational& alpha, const Rational& beta,
                                 const Rational& gamma) {
  const int sa = alpha.sign();
  const int sb = beta.sign();
  const int sg = gamma.sign();
  ConditionSet s;
  auto& c = s.c;
  c[1] = sa > 0 && R > 1;
  c[2] = sa == 0 && sb > 0 && R > 2;
  c[3] = sa < 0;
  c[4] = R <= 1;
  c[5] = sa == 0 && R == 2;
  c[6] = sa == 0 && sb <= 0;
  c[7] = sa > 0;
  c[8] = sa == 0 && sb > 0;
  c[9] = sa == 0 && sb < 0 && R > 1;
  c[10] = sa == 0 && sb == 0 && R > 2;
  c[11] = sa == 0 && sg < 0 && R == 1;
  c[12] = sa == 0 && sb <= 0 && sg > 0 && R == 1;
  c[13] = sa == 0 && R == 0;
  c[14] = sa == 0 && sb < 0 && R == 1;
  c[15] = sa == 0 && sb <= 0 && R == 1;
  c[16] = sa == 0 && sb == 0 && R == 2;
  c[17] = sa < 0 && R >= 1;
  c[18] = sa == 0 && sb <= 0 && R > 2;
  c[19] = sa < 0 && R > 1;
  c[20] = sa < 0 && R <= 1;
  c[21] = sa == 0 && sb < 0 && R == 2;
  return s;
}

ConditionSet evaluate_conditions(const Parameters& p) {
  return evaluate_conditions(p.R, p.alpha, p.beta.value_or(Rational()), p.gamma);
}

}  // namespace polyctmc

#ifndef POLYCTMC_CONDITIONS_HPP
#define POLYCTMC_CONDITIONS_HPP

#include <array>
#include <vector>

#include "polyctmc/parameters.hpp"

namespace polyctmc {

/// The twenty-one sign conditions on (R, alpha, beta, gamma) that drive the
/// decision theorems. Indexing is 1-based to match the condition names.
struct ConditionSet {
  std::array<bool, 22> c{};

  bool operator[](int i) const { return c.at(static_cast<size_t>(i)); }

  std::vector<int> fired() const {
    std::vector<int> out;
    for (int i = 1; i <= 21; ++i)
      if (c[static_cast<size_t>(i)]) out.push_back(i);
    return out;
  }
};

/// Exact sign tests; every condition is decided (beta is always available
/// for the supported kernel families, though only informational when the
/// jump set is infinite).
ConditionSet evaluate_conditions(const Parameters& p);

/// Same tests from raw values, used by property sweeps.
ConditionSet evaluate_conditions(int R, const Rational& alpha, const Rational& beta,
                                 const Rational& gamma);

}  // namespace polyctmc

#endif

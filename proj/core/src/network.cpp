#include "polyctmc/network.hpp"

#include <cctype>
#include <sstream>

#include "polyctmc/assumptions.hpp"

namespace polyctmc {

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;
  int line;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  int column() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, column(), what); }

  bool eat(std::string_view token) {
    skip_ws();
    if (s.compare(pos, token.size(), token) == 0) {
      pos += token.size();
      return true;
    }
    return false;
  }

  // complex := "0" | "S" | int "S"; returns the species count.
  int complex() {
    skip_ws();
    if (pos >= s.size()) fail("expected a complex");
    if (s[pos] == '0') {
      ++pos;
      return 0;
    }
    int n = 1;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      n = std::stoi(std::string(s.substr(start, pos - start)));
      if (n < 1) fail("complex multiplicity must be positive");
    }
    if (pos >= s.size() || s[pos] != 'S') fail("expected 'S'");
    ++pos;
    return n;
  }

  Rational rate() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' ||
                              s[pos] == '/' || s[pos] == '-' || s[pos] == '+' || s[pos] == 'e' ||
                              s[pos] == 'E'))
      ++pos;
    if (start == pos) fail("expected a rate constant");
    Rational r;
    try {
      r = Rational::parse(s.substr(start, pos - start));
    } catch (const std::exception&) {
      pos = start;
      fail("bad rate constant");
    }
    return r;
  }
};

}  // namespace

Network parse_network(std::string_view text) {
  Network net;
  int lineno = 0;
  size_t begin = 0;
  while (begin <= text.size()) {
    size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(begin, end - begin);
    begin = end + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Cursor cur{raw, 0, lineno};
    if (cur.done()) {
      if (end == text.size()) break;
      continue;
    }

    const int n = cur.complex();
    bool reversible = false;
    if (cur.eat("<->"))
      reversible = true;
    else if (!cur.eat("->"))
      cur.fail("expected '->' or '<->'");
    const int m = cur.complex();
    if (!cur.eat("@")) cur.fail("expected '@' before the rate constant(s)");
    const Rational forward = cur.rate();
    std::optional<Rational> backward;
    if (cur.eat(",")) backward = cur.rate();
    if (!cur.done()) cur.fail("trailing input after reaction");

    if (n == m) cur.fail("no net change (reactant and product counts are equal)");
    if (forward.sign() <= 0) cur.fail("rate constant must be positive");
    if (reversible) {
      if (!backward) cur.fail("reversible reaction needs two rate constants");
      if (backward->sign() <= 0) cur.fail("rate constant must be positive");
      net.reactions.push_back({n, m, forward});
      net.reactions.push_back({m, n, *backward});
    } else {
      if (backward) cur.fail("one-way reaction takes a single rate constant");
      net.reactions.push_back({n, m, forward});
    }
    if (end == text.size()) break;
  }
  if (net.reactions.empty()) throw ParseError(lineno, 1, "no reactions");
  return net;
}

std::string render(const Network& net) {
  std::ostringstream os;
  auto complex_str = [](int n) {
    if (n == 0) return std::string("0");
    if (n == 1) return std::string("S");
    return std::to_string(n) + "S";
  };
  for (const auto& r : net.reactions)
    os << complex_str(r.reactants) << " -> " << complex_str(r.products) << " @ " << r.rate.str()
       << "\n";
  return os.str();
}

ChainSpec compile_mass_action(const Network& net, std::optional<std::set<long long>> absorbing_override) {
  FiniteKernel kernel;
  long long u = 0;
  for (const auto& r : net.reactions) {
    const int omega = r.products - r.reactants;
    const Polynomial term = Polynomial::descending_factorial(r.reactants).scale(r.rate);
    auto [it, fresh] = kernel.rates.try_emplace(omega, term);
    if (!fresh) it->second = it->second + term;
    u = std::max<long long>(u, r.reactants);
  }
  kernel.tail_threshold = u;
  // Exact per-state rates below the threshold; the descending factorial
  // vanishes where x < n, so these are non-negative by construction.
  for (long long x = 0; x < u; ++x) {
    for (const auto& [omega, poly] : kernel.rates) {
      Rational v = poly.eval(x);
      if (v.sign() > 0 && x + omega >= 0) kernel.overrides[{x, omega}] = std::move(v);
    }
  }

  ChainSpec raw(kernel, {}, net.label);
  if (absorbing_override) return ChainSpec(std::move(kernel), *absorbing_override, net.label);
  AbsorptionDetection det = detect_absorption(raw, default_bound(raw));
  return ChainSpec(std::move(kernel), std::move(det.absorbing), net.label, std::move(det.excluded));
}

}  // namespace polyctmc

#ifndef POLYCTMC_NETWORK_HPP
#define POLYCTMC_NETWORK_HPP

#include <optional>
#include <string>

#include "polyctmc/chain.hpp"

namespace polyctmc {

/// Parse failure with source position, thrown by the DSL front end.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// One reaction nS -> mS with a positive rate constant. n = m is forbidden
/// (no net change, no transition).
struct Reaction {
  int reactants = 0;  // n
  int products = 0;   // m
  Rational rate;      // kappa

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

struct Network {
  std::vector<Reaction> reactions;
  std::string label;

  friend bool operator==(const Network& a, const Network& b) { return a.reactions == b.reactions; }
};

/// Parses reaction lines:
///   line    := complex arrow complex "@" rate ("," rate)?
///   complex := "0" | "S" | <positive int> "S"
///   arrow   := "->" | "<->"
/// A "<->" line yields two reactions, the forward constant first. Comments
/// start with '#'.
Network parse_network(std::string_view text);

/// Canonical rendering, one "nS -> mS @ kappa" line per reaction; reparsing
/// it reproduces the network exactly.
std::string render(const Network& net);

/// Mass-action compilation: reaction (n, m, kappa) contributes
/// kappa * x(x-1)...(x-n+1) to the rate of jump m - n. The tail threshold is
/// the largest reactant count, with exact per-state rates stored below it.
/// The absorbing set is auto-detected (states that cannot rejoin the
/// unbounded class; unreachable ones are dropped from the state space)
/// unless an explicit set is given.
ChainSpec compile_mass_action(const Network& net,
                              std::optional<std::set<long long>> absorbing_override = std::nullopt);

}  // namespace polyctmc

#endif

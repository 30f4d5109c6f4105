#ifndef POLYCTMC_MODEL_FILE_HPP
#define POLYCTMC_MODEL_FILE_HPP

#include <optional>
#include <string>

#include "polyctmc/builders.hpp"
#include "polyctmc/network.hpp"

namespace polyctmc {

/// A fully parsed model file: the chain it describes plus a canonical echo
/// of the model for reports.
struct ModelFile {
  enum class Kind { Network, Branching, Gene, Verhulst, Runaway };

  Kind kind = Kind::Network;
  std::optional<Network> network;  // present for Kind::Network
  ChainSpec spec;
  std::string canonical;  // canonical model text

  explicit ModelFile(ChainSpec s) : spec(std::move(s)) {}
};

/// Parses the model-file dialect. Reaction lines form a mass-action network
/// (the default). Directives, one per line:
///   model = network | branching | gene | verhulst | runaway
///   absorbing = {0, 1}            explicit absorbing set (network models)
///   r = x^2 + x                   branching rate polynomial
///   r = [1, 2]                    gene degradation constants r_1..r_J2
///   c = 5/2                       verhulst / runaway reproduction rate
///   c = [1, 0, 2]                 gene production constants c_0..c_J1
///   K = 10                        carrying capacity
///   mu = geom(1/2)                burst / offspring law
///   mu = [geom(1/2), dirac(2)]    gene burst laws, one per channel
///   q0 = {1: 2, 3: 1/2}           branching rates out of state 0
///   E = 3/2, E2 = 4               optional declared law moments (validated)
/// Jump-law literals: dirac(k), geom(p), poisson(l), negbin(r,p),
/// pmf{k1:w1,...}. '#' starts a comment.
ModelFile parse_model_text(const std::string& text, const std::string& label);

/// Reads and parses a model file from disk.
ModelFile load_model_file(const std::string& path);

}  // namespace polyctmc

#endif

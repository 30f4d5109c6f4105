#ifndef POLYCTMC_REPORT_HPP
#define POLYCTMC_REPORT_HPP

#include <nlohmann/json.hpp>

#include "polyctmc/assumptions.hpp"
#include "polyctmc/classifier.hpp"
#include "polyctmc/model_file.hpp"
#include "polyctmc/simulate.hpp"

namespace polyctmc {

/// Everything one invocation learned about a model. Human and JSON renderings
/// are both produced from this single value.
struct Report {
  std::string model_kind;
  std::string label;
  std::string canonical;
  std::set<long long> absorbing;
  std::set<long long> excluded;
  bool support_finite = true;
  long long tail_threshold = 0;
  AssumptionReport assumptions;
  Parameters params;
  ConditionSet conditions;
  ClassificationReport classification;
  std::optional<BatchSummary> simulation;
  uint64_t seed = 0;
};

/// Runs the full pipeline (assumptions, parameters, conditions, verdicts) on
/// a parsed model.
Report analyze(const ModelFile& model, long long bound);

std::string model_kind_name(ModelFile::Kind k);

nlohmann::json to_json(const BatchSummary& s);
nlohmann::json to_json(const AssumptionReport& a);
nlohmann::json to_json(const Report& r);

std::string human_text(const Report& r);
std::string human_text(const BatchSummary& s);

}  // namespace polyctmc

#endif

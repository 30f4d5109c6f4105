#include "polyctmc/report.hpp"

#include <sstream>

#include "polyctmc/version.hpp"

namespace polyctmc {

using nlohmann::json;

std::string model_kind_name(ModelFile::Kind k) {
  switch (k) {
    case ModelFile::Kind::Network:
      return "network";
    case ModelFile::Kind::Branching:
      return "branching";
    case ModelFile::Kind::Gene:
      return "gene";
    case ModelFile::Kind::Verhulst:
      return "verhulst";
    case ModelFile::Kind::Runaway:
      return "runaway";
  }
  return "?";
}

Report analyze(const ModelFile& model, long long bound) {
  Report r;
  r.model_kind = model_kind_name(model.kind);
  r.label = model.spec.label();
  r.canonical = model.canonical;
  r.absorbing = model.spec.absorbing_set();
  r.excluded = model.spec.excluded_states();
  r.support_finite = model.spec.support_finite();
  r.tail_threshold = model.spec.tail_threshold();
  r.assumptions = check_assumptions(model.spec, bound);
  r.params = compute_parameters(model.spec);
  r.conditions = evaluate_conditions(r.params);
  r.classification = classify(r.params, !model.spec.absorbing_set().empty());
  return r;
}

namespace {

json rational_json(const Rational& q) { return q.str_pq(); }

json polynomial_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
  return a;
}

json verdict_json(const Verdict& v) {
  json j;
  j["value"] = to_string(v.value);
  json conds = json::array();
  for (int c : v.conditions) conds.push_back("C" + std::to_string(c));
  j["conditions"] = conds;
  j["theorem"] = v.theorem;
  j["note"] = v.note;
  return j;
}

json moments_json(const MomentThresholds& m) {
  json j;
  if (m.exists_all)
    j["exists_below"] = "all";
  else if (m.exists_below)
    j["exists_below"] = rational_json(*m.exists_below);
  else
    j["exists_below"] = nullptr;
  j["fails_above"] = m.fails_above ? json(rational_json(*m.fails_above)) : json(nullptr);
  j["first_moment_finite"] = to_string(m.first_moment);
  j["theorem"] = m.theorem;
  j["note"] = m.note;
  return j;
}

json states_json(const std::set<long long>& s) {
  json a = json::array();
  for (long long x : s) a.push_back(x);
  return a;
}

}  // namespace

json to_json(const BatchSummary& s) {
  json j;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["end_reasons"] = {{"t_max", s.count_tmax},
                      {"max_jumps", s.count_max_jumps},
                      {"state_cap", s.count_state_cap},
                      {"absorbed", s.count_absorbed},
                      {"hit_target", s.count_hit_target}};
  j["hit_fraction"] = s.hit_fraction;
  j["mean_hitting_time"] = s.mean_hitting_time ? json(*s.mean_hitting_time) : json(nullptr);
  j["median_hitting_time"] = s.median_hitting_time ? json(*s.median_hitting_time) : json(nullptr);
  j["mean_final_time"] = s.mean_final_time;
  j["max_final_time"] = s.max_final_time;
  j["total_jumps"] = s.total_jumps;
  json surv = json::array();
  for (const auto& [t, p] : s.survival) surv.push_back(json::array({t, p}));
  j["survival"] = surv;
  json occ = json::object();
  for (const auto& [state, dt] : s.occupation) occ[std::to_string(state)] = dt;
  j["occupation"] = occ;
  return j;
}

json to_json(const AssumptionReport& a) {
  json j;
  j["positivity_bound"] = a.positivity_bound;
  j["reachability_cap"] = a.reachability_cap;
  for (int i = 1; i <= 5; ++i) {
    json e;
    e["status"] = to_string(a.a(i).status);
    e["detail"] = a.a(i).detail;
    j["A" + std::to_string(i)] = e;
  }
  return j;
}

json to_json(const Report& r) {
  json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kVersion;
  j["seed"] = r.seed;

  json model;
  model["kind"] = r.model_kind;
  model["label"] = r.label;
  model["canonical"] = r.canonical;
  model["absorbing"] = states_json(r.absorbing);
  model["excluded"] = states_json(r.excluded);
  model["support_finite"] = r.support_finite;
  model["tail_threshold"] = r.tail_threshold;
  j["model"] = model;

  j["assumptions"] = to_json(r.assumptions);

  json params;
  params["R"] = r.params.R;
  params["alpha"] = rational_json(r.params.alpha);
  params["gamma"] = rational_json(r.params.gamma);
  params["beta"] = r.params.beta ? json(rational_json(*r.params.beta)) : json(nullptr);
  params["vartheta"] = r.params.vartheta ? json(rational_json(*r.params.vartheta)) : json(nullptr);
  params["support_finite"] = r.params.support_finite;
  params["beta_informational"] = r.params.beta_informational;
  params["drift"] = polynomial_json(r.params.drift);
  params["second_moment"] =
      r.params.second_moment ? polynomial_json(*r.params.second_moment) : json(nullptr);
  j["parameters"] = params;

  json conds;
  for (int i = 1; i <= 21; ++i) conds["C" + std::to_string(i)] = r.conditions[i];
  j["conditions"] = conds;

  json cls;
  cls["theorem_family"] =
      r.classification.used_infinite_jump_theorems ? "infinite-jump-set" : "finite-jump-set";
  cls["explosive"] = verdict_json(r.classification.explosive);
  cls["explosive_almost_surely"] = r.classification.explosive_almost_surely;
  auto put = [&](const char* key, const std::optional<Verdict>& v) {
    cls[key] = v ? verdict_json(*v) : json(nullptr);
  };
  put("recurrent", r.classification.recurrent);
  put("transient", r.classification.transient);
  put("certain_absorption", r.classification.certain_absorption);
  put("positive_recurrent", r.classification.positive_recurrent);
  put("null_recurrent", r.classification.null_recurrent);
  put("exponentially_ergodic", r.classification.exponentially_ergodic);
  put("qsd", r.classification.qsd);
  put("implosive", r.classification.implosive);
  cls["moment_thresholds"] =
      r.classification.moments ? moments_json(*r.classification.moments) : json(nullptr);
  cls["table1_cell"] = r.classification.table1 ? json(*r.classification.table1) : json(nullptr);
  j["classification"] = cls;

  j["simulation"] = r.simulation ? to_json(*r.simulation) : json(nullptr);
  return j;
}

namespace {

std::string states_str(const std::set<long long>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (long long x : s) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  os << "}";
  return os.str();
}

void verdict_line(std::ostringstream& os, const char* name, const std::optional<Verdict>& v) {
  if (!v) return;
  os << "  " << name;
  for (size_t i = std::string(name).size(); i < 24; ++i) os << ' ';
  os << to_string(v->value);
  if (!v->conditions.empty()) {
    os << "  [";
    for (size_t i = 0; i < v->conditions.size(); ++i)
      os << (i ? ", " : "") << "C" << v->conditions[i];
    os << "]";
  }
  os << "  " << v->theorem;
  if (!v->note.empty()) os << "  (" << v->note << ")";
  os << "\n";
}

}  // namespace

std::string human_text(const BatchSummary& s) {
  std::ostringstream os;
  os << "simulation: " << s.trials << " trial(s), seed " << s.seed << "\n";
  os << "  end reasons: t_max " << s.count_tmax << ", max_jumps " << s.count_max_jumps
     << ", state_cap " << s.count_state_cap << ", absorbed " << s.count_absorbed << ", hit_target "
     << s.count_hit_target << "\n";
  os << "  hit fraction " << s.hit_fraction;
  if (s.mean_hitting_time) os << ", mean hitting time " << *s.mean_hitting_time;
  if (s.median_hitting_time) os << ", median " << *s.median_hitting_time;
  os << "\n  mean final time " << s.mean_final_time << ", max final time " << s.max_final_time
     << ", total jumps " << s.total_jumps << "\n";
  return os.str();
}

std::string human_text(const Report& r) {
  std::ostringstream os;
  os << "model: " << r.label << " (" << r.model_kind << ")\n";
  {
    std::istringstream canon(r.canonical);
    std::string line;
    while (std::getline(canon, line))
      if (!line.empty()) os << "    " << line << "\n";
  }
  os << "  absorbing set " << states_str(r.absorbing);
  if (!r.excluded.empty()) os << ", excluded states " << states_str(r.excluded);
  os << ", tail threshold " << r.tail_threshold
     << (r.support_finite ? ", finite jump set" : ", infinite jump set") << "\n";

  os << "assumptions (positivity bound " << r.assumptions.positivity_bound << ", reachability cap "
     << r.assumptions.reachability_cap << "):\n";
  for (int i = 1; i <= 5; ++i)
    os << "  A" << i << "  " << to_string(r.assumptions.a(i).status) << "  "
       << r.assumptions.a(i).detail << "\n";

  os << "parameters:\n  R=" << r.params.R << " alpha=" << r.params.alpha.str()
     << " beta=" << (r.params.beta ? r.params.beta->str() : "undefined")
     << " gamma=" << r.params.gamma.str()
     << " vartheta=" << (r.params.vartheta ? r.params.vartheta->str() : "undefined");
  if (r.params.beta_informational) os << "  (beta informational: infinite jump set)";
  os << "\n  drift = " << r.params.drift.str() << "\n";
  if (r.params.second_moment) os << "  second moment = " << r.params.second_moment->str() << "\n";

  os << "conditions fired:";
  bool any = false;
  for (int i = 1; i <= 21; ++i)
    if (r.conditions[i]) {
      os << " C" << i;
      any = true;
    }
  if (!any) os << " none";
  os << "\n";

  os << "classification ("
     << (r.classification.used_infinite_jump_theorems ? "infinite jump set theorems"
                                                      : "finite jump set theorems")
     << "):\n";
  {
    std::optional<Verdict> expl = r.classification.explosive;
    if (r.classification.explosive_almost_surely)
      expl->note = expl->note.empty() ? "almost surely" : expl->note + "; almost surely";
    verdict_line(os, "explosive", expl);
  }
  verdict_line(os, "recurrent", r.classification.recurrent);
  verdict_line(os, "transient", r.classification.transient);
  verdict_line(os, "certain_absorption", r.classification.certain_absorption);
  verdict_line(os, "positive_recurrent", r.classification.positive_recurrent);
  verdict_line(os, "null_recurrent", r.classification.null_recurrent);
  verdict_line(os, "exponentially_ergodic", r.classification.exponentially_ergodic);
  verdict_line(os, "qsd", r.classification.qsd);
  verdict_line(os, "implosive", r.classification.implosive);
  if (r.classification.moments) {
    const auto& m = *r.classification.moments;
    os << "  hitting-time moments: ";
    if (m.exists_all)
      os << "E tau^eps finite for every eps > 0";
    else if (m.exists_below)
      os << "E tau^eps finite for 0 < eps < " << m.exists_below->str();
    else
      os << "no finiteness threshold";
    if (m.fails_above) os << "; infinite for eps > " << m.fails_above->str();
    os << "; first moment " << to_string(m.first_moment) << "  " << m.theorem << "\n";
  }
  if (r.classification.table1) os << "  parameter table cell: " << *r.classification.table1 << "\n";
  if (r.simulation) os << human_text(*r.simulation);
  return os.str();
}

}  // namespace polyctmc

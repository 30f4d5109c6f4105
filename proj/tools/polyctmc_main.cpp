// Command-line front end: classify | params | check | simulate | qfcheck.
// Exit codes: 0 success, 1 parse/usage error, 2 assumption or model violation.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "polyctmc/report.hpp"
#include "polyctmc/version.hpp"

using namespace polyctmc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitAssumption = 2;

struct Options {
  std::string file;
  bool json = false;
  long long bound = -1;  // -1: default bound
  // simulate
  long long x0 = 0;
  double t_max = std::numeric_limits<double>::infinity();
  long long max_jumps = 1'000'000;
  long long state_cap = 100'000;
  long long trials = 100;
  uint64_t seed = 0;
  std::string target;
  int threads = 1;
  bool no_occupation = false;
  std::string csv;
  bool tail = false;
  // qfcheck
  std::string family = "pow";
  double delta = 1.0;
  std::string grid = "100,1000,10000";
};

std::set<long long> parse_target(const std::string& text) {
  std::set<long long> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    if (auto dots = tok.find(".."); dots != std::string::npos) {
      const long long a = std::stoll(tok.substr(0, dots));
      const long long b = std::stoll(tok.substr(dots + 2));
      for (long long x = a; x <= b; ++x) out.insert(x);
    } else {
      out.insert(std::stoll(tok));
    }
  }
  return out;
}

long long effective_bound(const Options& opt, const ChainSpec& spec) {
  return opt.bound >= 0 ? opt.bound : default_bound(spec);
}

int check_gate(const Report& rep, bool print_diag) {
  if (!rep.assumptions.all_ok()) {
    if (print_diag) {
      for (int i = 1; i <= 5; ++i)
        if (rep.assumptions.a(i).status == AssumptionStatus::Violated)
          std::cerr << "assumption A" << i << " violated: " << rep.assumptions.a(i).detail << "\n";
    }
    return kExitAssumption;
  }
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  ModelFile model = load_model_file(opt.file);
  Report rep = analyze(model, effective_bound(opt, model.spec));
  if (opt.json)
    std::cout << to_json(rep).dump(2) << "\n";
  else
    std::cout << human_text(rep);
  return check_gate(rep, true);
}

int cmd_params(const Options& opt) {
  ModelFile model = load_model_file(opt.file);
  const Parameters p = compute_parameters(model.spec);
  if (opt.json) {
    nlohmann::json j;
    j["R"] = p.R;
    j["alpha"] = p.alpha.str_pq();
    j["beta"] = p.beta ? nlohmann::json(p.beta->str_pq()) : nlohmann::json(nullptr);
    j["gamma"] = p.gamma.str_pq();
    j["vartheta"] = p.vartheta ? nlohmann::json(p.vartheta->str_pq()) : nlohmann::json(nullptr);
    j["support_finite"] = p.support_finite;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "R=" << p.R << " alpha=" << p.alpha.str()
              << " beta=" << (p.beta ? p.beta->str() : "undefined") << " gamma=" << p.gamma.str()
              << "\n";
  }
  return kExitOk;
}

int cmd_check(const Options& opt) {
  ModelFile model = load_model_file(opt.file);
  const AssumptionReport rep = check_assumptions(model.spec, effective_bound(opt, model.spec));
  if (opt.json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "assumptions (positivity bound " << rep.positivity_bound << "):\n";
    for (int i = 1; i <= 5; ++i)
      std::cout << "  A" << i << "  " << to_string(rep.a(i).status) << "  " << rep.a(i).detail
                << "\n";
  }
  return rep.all_ok() ? kExitOk : kExitAssumption;
}

int cmd_simulate(const Options& opt) {
  ModelFile model = load_model_file(opt.file);
  SimConfig cfg;
  cfg.x0 = opt.x0;
  cfg.t_max = opt.t_max;
  cfg.max_jumps = opt.max_jumps;
  cfg.state_cap = opt.state_cap;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  cfg.record_occupation = !opt.no_occupation;
  if (!opt.target.empty()) cfg.target = parse_target(opt.target);

  Report rep = analyze(model, effective_bound(opt, model.spec));
  const int gate = check_gate(rep, true);
  if (gate != kExitOk) return gate;

  TrialBatch batch = simulate(model.spec, cfg);
  rep.simulation = batch.summary;
  rep.seed = cfg.seed;

  if (!opt.csv.empty()) {
    std::ofstream out(opt.csv);
    out << trials_csv(batch);
  }
  if (opt.json)
    std::cout << to_json(rep).dump(2) << "\n";
  else
    std::cout << human_text(batch.summary);
  if (opt.tail) {
    try {
      const TailEstimate est = estimate_hitting_tail(batch);
      if (est.ok)
        std::printf("tail exponent %.4f  ci [%.4f, %.4f]  window [%.3g, %.3g]  points %d\n",
                    est.exponent, est.ci_low, est.ci_high, est.window_low, est.window_high,
                    est.points);
      else
        std::cout << "tail estimate rejected: " << est.note << "\n";
    } catch (const std::exception& e) {
      std::cout << "tail estimate unavailable: " << e.what() << "\n";
    }
  }
  return kExitOk;
}

int cmd_qfcheck(const Options& opt) {
  ModelFile model = load_model_file(opt.file);
  const auto family = qf_family_from_string(opt.family);
  if (!family) {
    std::cerr << "unknown family '" << opt.family << "' (pow, x-over-log, x-log, log, loglog)\n";
    return kExitParse;
  }
  std::vector<long long> grid;
  {
    std::istringstream is(opt.grid);
    std::string tok;
    while (std::getline(is, tok, ','))
      if (!tok.empty()) grid.push_back(std::stoll(tok));
  }
  const Parameters p = compute_parameters(model.spec);
  const auto rows = check_generator_expansion(model.spec, p, *family, opt.delta, grid);
  if (opt.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json e;
      e["x"] = r.x;
      e["exact"] = r.exact;
      e["expansion"] = r.expansion;
      e["rel_error"] = r.order_only ? nlohmann::json(nullptr) : nlohmann::json(r.rel_error);
      e["order_only"] = r.order_only;
      if (r.order_only) e["order_ratio"] = r.order_ratio;
      j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%12s %18s %18s %12s\n", "x", "exact Qf", "expansion", "rel error");
    for (const auto& r : rows) {
      if (r.order_only)
        std::printf("%12lld %18.8g %18.8g %12s (order ratio %.3g)\n", r.x, r.exact, r.expansion,
                    "--", r.order_ratio);
      else
        std::printf("%12lld %18.8g %18.8g %12.3e\n", r.x, r.exact, r.expansion, r.rel_error);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long-run classification of one-dimensional CTMCs with polynomial rates"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "model file")->required();
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_option("--bound", opt.bound, "positivity/reachability bound");
  };

  add_common(app.add_subcommand("classify", "full pipeline: assumptions, parameters, verdicts"));
  add_common(app.add_subcommand("params", "threshold parameters only"));
  add_common(app.add_subcommand("check", "assumption report only"));

  CLI::App* sim = app.add_subcommand("simulate", "stochastic simulation");
  add_common(sim);
  sim->add_option("--x0", opt.x0, "initial state");
  sim->add_option("--t-max", opt.t_max, "time horizon");
  sim->add_option("--max-jumps", opt.max_jumps, "jump cap per trial");
  sim->add_option("--state-cap", opt.state_cap, "explosion proxy threshold");
  sim->add_option("--trials", opt.trials, "number of trials");
  sim->add_option("--seed", opt.seed, "RNG seed");
  sim->add_option("--target", opt.target, "hitting target, e.g. 0..5 or 0,3,7");
  sim->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
  sim->add_flag("--no-occupation", opt.no_occupation, "skip residence-time histograms");
  sim->add_option("--csv", opt.csv, "dump per-trial rows to this file");
  sim->add_flag("--tail", opt.tail, "estimate the hitting-time tail exponent");

  CLI::App* qf = app.add_subcommand("qfcheck", "generator-expansion check");
  add_common(qf);
  qf->add_option("--family", opt.family, "pow | x-over-log | x-log | log | loglog");
  qf->add_option("--delta", opt.delta, "exponent of the test function");
  qf->add_option("--grid", opt.grid, "comma-separated states");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (app.got_subcommand("classify")) return cmd_classify(opt);
    if (app.got_subcommand("params")) return cmd_params(opt);
    if (app.got_subcommand("check")) return cmd_check(opt);
    if (app.got_subcommand("simulate")) return cmd_simulate(opt);
    if (app.got_subcommand("qfcheck")) return cmd_qfcheck(opt);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kExitAssumption;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "polyctmc/report.hpp"
#include "schema_check.hpp"
#include "test_models.hpp"

using namespace polyctmc;
using namespace polyctmc::testmodels;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/polyctmc_test_out.txt";
  const std::string err_path = "/tmp/polyctmc_test_err.txt";
  const std::string cmd =
      std::string(POLYCTMC_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  return CliResult{WEXITSTATUS(status), slurp(out_path), slurp(err_path)};
}

std::string write_model(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/" + name;
  std::ofstream(path) << text;
  return path;
}

nlohmann::json load_schema() {
  std::ifstream in(std::string(POLYCTMC_SOURCE_DIR) + "/docs/report.schema.json");
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

const char* kExplosiveNet =
    "S <-> 2S @ 1, 2\n"
    "2S <-> 3S @ 4, 4\n"
    "3S <-> 4S @ 6, 1\n"
    "4S -> 5S @ 1\n";

}  // namespace

TEST_CASE("report JSON validates against the shipped schema") {
  const nlohmann::json schema = load_schema();

  ModelFile net = parse_model_text(kExplosiveNet, "explosive");
  Report rep = analyze(net, default_bound(net.spec));
  auto errors = schema_check::validate(to_json(rep), schema);
  for (const auto& e : errors) MESSAGE(e);
  CHECK(errors.empty());

  // With a simulation attached and an infinite-jump model.
  ModelFile ver = parse_model_text("model = verhulst\nc = 1\nK = 10\nmu = geom(1/2)\n", "v");
  Report vrep = analyze(ver, default_bound(ver.spec));
  SimConfig cfg;
  cfg.x0 = 5;
  cfg.t_max = 5.0;
  cfg.trials = 50;
  vrep.simulation = simulate(ver.spec, cfg).summary;
  errors = schema_check::validate(to_json(vrep), schema);
  for (const auto& e : errors) MESSAGE(e);
  CHECK(errors.empty());
}

TEST_CASE("human text and JSON come from one report value") {
  ModelFile net = parse_model_text(kExplosiveNet, "explosive");
  const Report rep = analyze(net, default_bound(net.spec));
  const std::string human = human_text(rep);
  const nlohmann::json j = to_json(rep);
  // Spot-check that the two renderings agree on the key facts.
  CHECK(human.find("R=4") != std::string::npos);
  CHECK(j["parameters"]["R"] == 4);
  CHECK(human.find("explosive               holds") != std::string::npos);
  CHECK(j["classification"]["explosive"]["value"] == "holds");
  CHECK(j["classification"]["explosive"]["theorem"] == "Thm th-7");
}

TEST_CASE("cli: classify reports the explosive verdict with its rule") {
  const std::string path = write_model("explosive.model", kExplosiveNet);
  const CliResult json = run_cli("classify " + path + " --json");
  CHECK(json.exit_code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["classification"]["explosive"]["value"] == "holds");
  CHECK(j["classification"]["explosive"]["conditions"][0] == "C2");
  CHECK(j["classification"]["explosive"]["theorem"] == "Thm th-7");
}

TEST_CASE("cli: params prints the exact parameter line") {
  const std::string path = write_model("srn2.model",
                                       "0 <-> S @ 1, 1\n"
                                       "S <-> 2S @ 1, 2\n"
                                       "2S -> 4S @ 1\n");
  const CliResult res = run_cli("params " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out == "R=2 alpha=0 beta=-3 gamma=0\n");
}

TEST_CASE("cli: malformed arrow yields exit 1 and a located message") {
  const std::string path = write_model("bad.model",
                                       "S -> 2S @ 1\n"
                                       "2S -> 3S @ 1\n"
                                       "3S => 4S @ 1\n");
  const CliResult res = run_cli("classify " + path);
  CHECK(res.exit_code == 1);
  CHECK(res.err.find("line 3") != std::string::npos);
  CHECK(res.err.find("expected '->' or '<->'") != std::string::npos);
}

TEST_CASE("cli: assumption violation yields exit 2") {
  const std::string path = write_model("pure_birth.model", "S -> 2S @ 1\n");
  const CliResult res = run_cli("classify " + path);
  CHECK(res.exit_code == 2);
  CHECK(res.err.find("A1") != std::string::npos);
}

TEST_CASE("cli: simulate is reproducible for a fixed seed") {
  const std::string path = write_model("bdp.model", "0 <-> S @ 1, 1\n");
  const std::string args = "simulate " + path + " --x0 5 --trials 64 --t-max 20 --seed 7 --json";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args + " --threads 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["simulation"]["trials"] == 64);
}

TEST_CASE("cli: qfcheck prints a decreasing error table") {
  const std::string path = write_model("j2.model",
                                       "S -> 2S @ 1\n2S -> 3S @ 1\nS -> 0 @ 1\n2S -> S @ 1\n");
  const CliResult res =
      run_cli("qfcheck " + path + " --family pow --delta 0.5 --grid 100,1000,10000 --json");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["rel_error"].get<double>() > j[2]["rel_error"].get<double>());
  CHECK(j[2]["rel_error"].get<double>() < 0.01);
}

TEST_CASE("cli: csv dump has the documented header") {
  const std::string path = write_model("bdp2.model", "0 <-> S @ 1, 1\n");
  const CliResult res = run_cli("simulate " + path +
                                " --x0 3 --trials 5 --t-max 5 --seed 1 --csv /tmp/polyctmc_trials.csv");
  CHECK(res.exit_code == 0);
  std::ifstream csv("/tmp/polyctmc_trials.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "trial,end_reason,final_state,final_time,jump_count,hitting_time");
}

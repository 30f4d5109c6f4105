#include "polyctmc/model_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace polyctmc {

namespace {

std::string strip(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top_level(const std::string& body, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : body) {
    if (ch == '(' || ch == '{' || ch == '[') ++depth;
    if (ch == ')' || ch == '}' || ch == ']') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!strip(cur).empty()) out.push_back(strip(cur));
  return out;
}

struct Directives {
  std::optional<std::string> model, r, c, mu, q0, absorbing;
  std::optional<std::string> K, E, E2;
  int line_of_model = 0;
};

bool is_directive(const std::string& line, std::string& key, std::string& value) {
  auto eq = line.find('=');
  if (eq == std::string::npos) return false;
  std::string k = strip(line.substr(0, eq));
  static const char* keys[] = {"model", "absorbing", "r", "mu", "c", "K", "E", "E2", "q0"};
  for (const char* kk : keys) {
    if (k == kk) {
      key = k;
      value = strip(line.substr(eq + 1));
      return true;
    }
  }
  return false;
}

std::vector<std::string> bracket_list(const std::string& v, int line) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']')
    throw ParseError(line, 1, "expected a [...] list");
  return split_top_level(v.substr(1, v.size() - 2), ',');
}

std::map<long long, Rational> brace_map(const std::string& v, int line) {
  if (v.size() < 2 || v.front() != '{' || v.back() != '}')
    throw ParseError(line, 1, "expected a {...} map");
  std::map<long long, Rational> out;
  for (const auto& entry : split_top_level(v.substr(1, v.size() - 2), ',')) {
    if (entry.empty()) continue;
    auto colon = entry.find(':');
    if (colon == std::string::npos) throw ParseError(line, 1, "expected 'key: value' entries");
    out[std::stoll(strip(entry.substr(0, colon)))] = Rational::parse(strip(entry.substr(colon + 1)));
  }
  return out;
}

}  // namespace

ModelFile parse_model_text(const std::string& text, const std::string& label) {
  Directives dir;
  std::map<std::string, int> dir_lines;
  std::ostringstream network_lines;
  int lineno = 0;
  std::istringstream is(text);
  std::string raw;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    if (strip(line).empty()) {
      network_lines << "\n";
      continue;
    }
    std::string key, value;
    if (is_directive(strip(line), key, value)) {
      dir_lines[key] = lineno;
      if (key == "model") {
        dir.model = value;
        dir.line_of_model = lineno;
      } else if (key == "absorbing")
        dir.absorbing = value;
      else if (key == "r")
        dir.r = value;
      else if (key == "mu")
        dir.mu = value;
      else if (key == "c")
        dir.c = value;
      else if (key == "K")
        dir.K = value;
      else if (key == "E")
        dir.E = value;
      else if (key == "E2")
        dir.E2 = value;
      else if (key == "q0")
        dir.q0 = value;
      network_lines << "\n";  // keep network line numbers aligned
    } else {
      network_lines << raw << "\n";
    }
  }

  const std::string model = dir.model.value_or("network");
  auto need = [&](const std::optional<std::string>& v, const char* what) -> const std::string& {
    if (!v) throw ParseError(lineno, 1, std::string("missing '") + what + "' for model " + model);
    return *v;
  };
  auto law_of = [&](const std::string& v) { return JumpLaw::parse(v); };

  // Optional declared moments: validated against the law's exact moments.
  auto validate_moments = [&](const JumpLaw& law) {
    if (dir.E && Rational::parse(*dir.E) != law.mean())
      throw ParseError(dir_lines["E"], 1,
                       "declared mean " + *dir.E + " does not match " + law.str() + " (mean " +
                           law.mean().str() + ")");
    if (dir.E2 && Rational::parse(*dir.E2) != law.second_moment())
      throw ParseError(dir_lines["E2"], 1,
                       "declared second moment " + *dir.E2 + " does not match " + law.str());
  };

  if (model == "network") {
    Network net = parse_network(network_lines.str());
    net.label = label;
    std::optional<std::set<long long>> absorbing;
    if (dir.absorbing) {
      std::string v = *dir.absorbing;
      if (v.size() < 2 || v.front() != '{' || v.back() != '}')
        throw ParseError(dir_lines["absorbing"], 1, "expected absorbing = {states}");
      std::set<long long> states;
      for (const auto& e : split_top_level(v.substr(1, v.size() - 2), ','))
        if (!e.empty()) states.insert(std::stoll(e));
      absorbing = std::move(states);
    }
    ModelFile mf(compile_mass_action(net, absorbing));
    mf.kind = ModelFile::Kind::Network;
    mf.canonical = render(net);
    mf.network = std::move(net);
    return mf;
  }

  if (model == "branching") {
    const Polynomial r = Polynomial::parse(need(dir.r, "r"));
    const JumpLaw mu = law_of(need(dir.mu, "mu"));
    validate_moments(mu);
    std::map<long long, Rational> q0;
    if (dir.q0) q0 = brace_map(*dir.q0, dir_lines["q0"]);
    ModelFile mf(build_branching(r, mu, q0));
    mf.kind = ModelFile::Kind::Branching;
    std::ostringstream os;
    os << "model = branching\nr = " << r.str() << "\nmu = " << mu.str() << "\n";
    if (!q0.empty()) {
      os << "q0 = {";
      bool first = true;
      for (const auto& [k, v] : q0) {
        if (!first) os << ", ";
        os << k << ": " << v.str();
        first = false;
      }
      os << "}\n";
    }
    mf.canonical = os.str();
    return mf;
  }

  if (model == "gene") {
    std::vector<Rational> c, rdeg;
    for (const auto& e : bracket_list(need(dir.c, "c"), dir_lines["c"])) c.push_back(Rational::parse(e));
    for (const auto& e : bracket_list(need(dir.r, "r"), dir_lines["r"]))
      rdeg.push_back(Rational::parse(e));
    std::vector<JumpLaw> mus;
    for (const auto& e : bracket_list(need(dir.mu, "mu"), dir_lines["mu"])) mus.push_back(law_of(e));
    ModelFile mf(build_gene_model(c, rdeg, mus));
    mf.kind = ModelFile::Kind::Gene;
    std::ostringstream os;
    os << "model = gene\nc = " << *dir.c << "\nr = " << *dir.r << "\nmu = " << *dir.mu << "\n";
    mf.canonical = os.str();
    return mf;
  }

  if (model == "verhulst" || model == "runaway") {
    const Rational c = Rational::parse(need(dir.c, "c"));
    const long long K = std::stoll(need(dir.K, "K"));
    const JumpLaw mu = law_of(need(dir.mu, "mu"));
    validate_moments(mu);
    ModelFile mf(model == "verhulst" ? build_verhulst(c, K, mu) : build_runaway(c, K, mu));
    mf.kind = model == "verhulst" ? ModelFile::Kind::Verhulst : ModelFile::Kind::Runaway;
    std::ostringstream os;
    os << "model = " << model << "\nc = " << c.str() << "\nK = " << K << "\nmu = " << mu.str()
       << "\n";
    mf.canonical = os.str();
    return mf;
  }

  throw ParseError(dir.line_of_model > 0 ? dir.line_of_model : 1, 1,
                   "unknown model kind '" + model + "'");
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string label = path;
  if (auto slash = label.find_last_of('/'); slash != std::string::npos) label = label.substr(slash + 1);
  return parse_model_text(buf.str(), label);
}

}  // namespace polyctmc

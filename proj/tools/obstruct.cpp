#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "obstruct/linking.hpp"
#include "obstruct/scenario.hpp"
#include "obstruct/surgery.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kConfigPathVar = "OBSTRUCT_CONFIG_PATH";

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw obstruct::Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Relative names not found as given are looked up in $OBSTRUCT_CONFIG_PATH
// (colon separated).
fs::path locate_config(const std::string& name) {
  fs::path p(name);
  if (fs::exists(p) || p.is_absolute()) return p;
  if (const char* env = std::getenv(kConfigPathVar)) {
    std::stringstream dirs(env);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty()) continue;
      fs::path candidate = fs::path(dir) / p;
      if (fs::exists(candidate)) return candidate;
    }
  }
  throw obstruct::Error("config file '" + name + "' not found (searched the working directory and $" +
                        kConfigPathVar + ")");
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw obstruct::Error(what + ": " + e.what());
  }
}

struct ReportArgs {
  std::string scenario;
  std::optional<long> p;
  std::optional<long> q;
  std::optional<long> n;
  std::string knot_j;
  std::string knot_k;
  std::string format = "text";
  std::string config;
};

int run_report(const ReportArgs& a) {
  const auto format = obstruct::report_format_from_string(a.format);
  obstruct::Scenario s;
  bool have_scenario = false;
  if (!a.config.empty()) {
    const auto path = locate_config(a.config);
    auto j = parse_json(read_file(path), path.string());
    if (!a.scenario.empty()) j["scenario"] = a.scenario;
    s = obstruct::scenario_from_json(j);
    have_scenario = true;
  }
  if (!have_scenario) {
    if (a.scenario.empty()) throw obstruct::Error("report needs --scenario or --config");
    s.kind = obstruct::scenario_kind_from_string(a.scenario);
  }
  if (a.p) s.p = a.p;
  if (a.q) s.q = a.q;
  if (a.n) s.n = a.n;
  if (!a.knot_j.empty()) s.knot_j = obstruct::parse_knot_spec(a.knot_j);
  if (!a.knot_k.empty()) s.knot_k = obstruct::parse_knot_spec(a.knot_k);

  std::cout << obstruct::render(obstruct::run_scenario(s), format);
  return 0;
}

int run_presentation(const std::string& file, const std::string& format) {
  const auto text = read_file(file);
  const auto pres = obstruct::parse_presentation(text);
  const auto problems = obstruct::validate(pres);
  if (!problems.empty()) {
    for (const auto& p : problems) std::cerr << file << ": " << p << "\n";
    return 1;
  }
  const auto b = obstruct::boundary_linking_matrix(pres);
  const auto h = obstruct::first_homology(b);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["presentation"] = obstruct::to_json(pres);
    j["linking_matrix"] = obstruct::to_string(b);
    j["h1"] = h.describe();
    j["homology_sphere"] = h.is_homology_sphere;
    std::cout << j.dump(2) << "\n";
  } else if (format == "text") {
    std::cout << obstruct::serialize(pres) << "\nlinking matrix:\n" << b << "\nH_1 = " << h.describe() << "\n";
  } else {
    throw obstruct::Error("unknown format '" + format + "' (expected text or json)");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"obstruct: exact obstructions to embedded balls and solid tori"};
  app.require_subcommand(1);

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "run a named scenario and print its report");
  std::string names;
  for (const auto& n : obstruct::scenario_names()) names += (names.empty() ? "" : ", ") + n;
  report->add_option("--scenario", ra.scenario, "one of: " + names);
  report->add_option("--p", ra.p, "lens or torus knot parameter p");
  report->add_option("--q", ra.q, "lens or torus knot parameter q");
  report->add_option("--n", ra.n, "framing n of the 2-handle");
  report->add_option("--knot-j", ra.knot_j, "knot J: name, T(p,q), twist(m) or inline JSON");
  report->add_option("--knot-k", ra.knot_k, "knot K: name, T(p,q), twist(m) or inline JSON");
  report->add_option("--format", ra.format, "text or json")->capture_default_str();
  report->add_option("--config", ra.config, std::string("JSON scenario file (also searched in $") + kConfigPathVar + ")");

  std::string pres_file;
  std::string pres_format = "text";
  auto* pres = app.add_subcommand("presentation", "validate a surgery presentation and print its homology");
  pres->add_option("file", pres_file, "presentation file")->required();
  pres->add_option("--format", pres_format, "text or json")->capture_default_str();

  app.add_subcommand("scenarios", "list scenario names");
  app.add_subcommand("knots", "list built-in knot names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*report) return run_report(ra);
    if (*pres) return run_presentation(pres_file, pres_format);
    if (app.got_subcommand("scenarios")) {
      for (const auto& n : obstruct::scenario_names()) std::cout << n << "\n";
      return 0;
    }
    for (const auto& n : obstruct::builtin_knot_names()) std::cout << n << "\n";
    return 0;
  } catch (const obstruct::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const obstruct::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#pragma once

// Named obstruction scenarios and the reports they produce.
//
// Every scenario is a pure pipeline over the library modules. Facts that are
// imported rather than computed (Rohlin invariants, irreducibility, results
// from the literature) enter as hypotheses, each with a provenance string, and
// are rendered separately from computed steps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "obstruct/knots.hpp"
#include "obstruct/legendrian.hpp"

namespace obstruct {

using ordered_json = nlohmann::ordered_json;

enum class ScenarioKind {
  SphereLens,
  SphereSmoothH,
  SphereSmoothE8H,
  TorusSolid,
  TorusTopVsSmooth,
  TwistExtension,
};

std::string to_string(ScenarioKind k);
ScenarioKind scenario_kind_from_string(const std::string& s);
std::vector<std::string> scenario_names();

struct Hypothesis {
  std::string name;
  nlohmann::json value;  // bool or integer
  std::string provenance;
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::SphereLens;
  std::optional<long> p;
  std::optional<long> q;
  std::optional<long> n;
  std::optional<Knot> knot_j;
  std::optional<Knot> knot_k;
  /// Overrides of the scenario's default hypotheses, by name.
  std::vector<Hypothesis> hypotheses;
  std::optional<std::map<std::string, FrontData>> fronts;
  long fox_milnor_degree_bound = kDefaultFoxMilnorDegreeBound;
};

/// Parses the JSON scenario configuration; unknown fields are rejected.
Scenario scenario_from_json(const nlohmann::json& j);

struct TraceStep {
  std::string operation;
  ordered_json inputs;
  ordered_json output;
};

struct Citation {
  std::string claim;
  std::string source;
};

enum class VerdictKind { Obstructed, NotObstructed, Extends, Mixed, Inconclusive };

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string summary;
  /// For Mixed: the statements that hold (true) and fail (false).
  std::vector<std::pair<std::string, bool>> facets;
};

struct Report {
  ordered_json scenario;
  std::vector<TraceStep> trace;
  std::vector<Hypothesis> hypotheses;
  std::vector<Citation> citations;
  Verdict verdict;
};

inline constexpr const char* kReportSchemaVersion = "obstruct-report/1";

/// Deterministic: equal scenarios give byte-identical renderings.
Report run_scenario(const Scenario& s);

/// Runs scenarios concurrently; results are in input order.
std::vector<Report> run_scenarios(const std::vector<Scenario>& scenarios);

enum class ReportFormat { Text, Json };

ReportFormat report_format_from_string(const std::string& s);
std::string render(const Report& r, ReportFormat format);
ordered_json report_to_json(const Report& r);

}  // namespace obstruct

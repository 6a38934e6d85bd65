#include <doctest.h>

#include "obstruct/scenario.hpp"

using namespace obstruct;

namespace {

Scenario lens(long p, long q) {
  Scenario s;
  s.kind = ScenarioKind::SphereLens;
  s.p = p;
  s.q = q;
  return s;
}

Scenario torus_solid(const std::string& j, const std::string& k, long n) {
  Scenario s;
  s.kind = ScenarioKind::TorusSolid;
  s.knot_j = knot_by_name(j);
  s.knot_k = knot_by_name(k);
  s.n = n;
  return s;
}

Scenario bare(ScenarioKind k) {
  Scenario s;
  s.kind = k;
  return s;
}

bool trace_has(const Report& r, const std::string& op) {
  for (const auto& st : r.trace)
    if (st.operation == op) return true;
  return false;
}

}  // namespace

TEST_SUITE("obstruction_cli") {
  TEST_CASE("names") {
    for (const auto& n : scenario_names()) CHECK(to_string(scenario_kind_from_string(n)) == n);
    CHECK_THROWS_AS(scenario_kind_from_string("sphere"), Error);
    CHECK_THROWS_AS(report_format_from_string("xml"), Error);
  }

  TEST_CASE("sphere-lens") {
    auto r = run_scenario(lens(5, 2));
    CHECK(r.verdict.kind == VerdictKind::Obstructed);
    auto text = render(r, ReportFormat::Text);
    CHECK(text.find("verdict: Obstructed") != std::string::npos);
    CHECK(text.find("{1, 4}") != std::string::npos);
    CHECK(run_scenario(lens(5, 1)).verdict.kind == VerdictKind::NotObstructed);
    CHECK_THROWS_AS(run_scenario(lens(6, 2)), Error);
    Scenario missing = bare(ScenarioKind::SphereLens);
    missing.p = 5;
    CHECK_THROWS_AS(run_scenario(missing), Error);
  }

  TEST_CASE("sphere-smooth") {
    auto h = run_scenario(bare(ScenarioKind::SphereSmoothH));
    CHECK(h.verdict.kind == VerdictKind::Obstructed);
    CHECK(h.trace.back().output.empty());

    auto e = run_scenario(bare(ScenarioKind::SphereSmoothE8H));
    CHECK(e.verdict.kind == VerdictKind::Obstructed);
    int excluded = 0;
    for (const auto& st : e.trace)
      if (st.operation == "exclude_splitting" && st.output.at("excluded").get<bool>()) ++excluded;
    CHECK(excluded == 2);

    Scenario weaker = bare(ScenarioKind::SphereSmoothE8H);
    weaker.hypotheses.push_back({"y2-bounds-no-acyclic", false, "dropped for this test"});
    CHECK(run_scenario(weaker).verdict.kind == VerdictKind::Inconclusive);
  }

  TEST_CASE("hypotheses need provenance and must apply") {
    Scenario s = bare(ScenarioKind::SphereSmoothH);
    s.hypotheses.push_back({"rho-y1", 0, ""});
    CHECK_THROWS_AS(run_scenario(s), Error);
    s.hypotheses = {{"irreducible", true, "x"}};
    CHECK_THROWS_AS(run_scenario(s), Error);
    s.hypotheses = {{"rho-y1", true, "x"}};
    CHECK_THROWS_AS(run_scenario(s), Error);
    s.hypotheses = {{"rho-y1", 0, "x"}, {"rho-y2", 0, "x"}};
    CHECK(run_scenario(s).verdict.kind == VerdictKind::Inconclusive);
  }

  TEST_CASE("torus-solid") {
    auto r = run_scenario(torus_solid("left-trefoil", "left-trefoil", 3));
    CHECK(r.verdict.kind == VerdictKind::Obstructed);
    CHECK(trace_has(r, "zero_classes"));
    CHECK(run_scenario(torus_solid("trefoil", "unknot", 0)).verdict.kind == VerdictKind::Inconclusive);
    auto fig8 = run_scenario(torus_solid("figure-eight", "figure-eight", 2));
    CHECK(fig8.verdict.kind == VerdictKind::Obstructed);
    CHECK(run_scenario(torus_solid("stevedore", "trefoil", 1)).verdict.kind == VerdictKind::Inconclusive);
    Scenario no_n = torus_solid("trefoil", "trefoil", 1);
    no_n.n.reset();
    CHECK_THROWS_AS(run_scenario(no_n), Error);
    Scenario extra = torus_solid("trefoil", "trefoil", 1);
    extra.p = 3;
    CHECK_THROWS_AS(run_scenario(extra), Error);
  }

  TEST_CASE("torus-top-vs-smooth") {
    auto r = run_scenario(bare(ScenarioKind::TorusTopVsSmooth));
    CHECK(r.verdict.kind == VerdictKind::Mixed);
    REQUIRE(r.verdict.facets.size() == 2);
    CHECK(r.verdict.facets[0].second);
    CHECK_FALSE(r.verdict.facets[1].second);
    auto text = render(r, ReportFormat::Text);
    CHECK(text.find("topological solid torus: yes, smooth solid torus: no") != std::string::npos);
    CHECK(text.find("hypotheses (imported, not computed)") != std::string::npos);

    Scenario unknown = bare(ScenarioKind::TorusTopVsSmooth);
    unknown.hypotheses.push_back({"surgered-manifold-irreducible", false, "not assumed"});
    CHECK(run_scenario(unknown).verdict.kind == VerdictKind::Obstructed);

    Scenario not_stein = bare(ScenarioKind::TorusTopVsSmooth);
    auto fronts = builtin_fronts();
    fronts["L2"] = FrontData{1, 1, 1};
    not_stein.fronts = fronts;
    CHECK(run_scenario(not_stein).verdict.kind == VerdictKind::Inconclusive);

    Scenario n1 = bare(ScenarioKind::TorusTopVsSmooth);
    n1.n = 1;
    CHECK_THROWS_AS(run_scenario(n1), Error);
  }

  TEST_CASE("twist-extension") {
    Scenario s = bare(ScenarioKind::TwistExtension);
    s.p = 2;
    s.q = 3;
    auto r = run_scenario(s);
    CHECK(r.verdict.kind == VerdictKind::Mixed);
    s.hypotheses.push_back({"alpha-twist-extends", false, "not assumed"});
    CHECK(run_scenario(s).verdict.kind == VerdictKind::Inconclusive);
    Scenario bad = bare(ScenarioKind::TwistExtension);
    bad.p = 2;
    bad.q = 4;
    CHECK_THROWS_AS(run_scenario(bad), Error);
  }

  TEST_CASE("determinism and concurrency") {
    std::vector<Scenario> batch{lens(5, 2), torus_solid("trefoil", "trefoil", -2), bare(ScenarioKind::TorusTopVsSmooth),
                                lens(7, 3), bare(ScenarioKind::SphereSmoothE8H)};
    auto a = run_scenarios(batch);
    auto b = run_scenarios(batch);
    REQUIRE(a.size() == batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto single = render(run_scenario(batch[i]), ReportFormat::Json);
      CHECK(render(a[i], ReportFormat::Json) == single);
      CHECK(render(b[i], ReportFormat::Json) == single);
      CHECK(render(a[i], ReportFormat::Text) == render(b[i], ReportFormat::Text));
    }
  }

  TEST_CASE("json report shape") {
    auto j = report_to_json(run_scenario(lens(5, 2)));
    CHECK(j.at("schema_version") == kReportSchemaVersion);
    CHECK(j.at("scenario").at("name") == "sphere-lens");
    CHECK(j.at("trace").size() == 1);
    CHECK(j.at("verdict").at("kind") == "Obstructed");
    auto parsed = nlohmann::json::parse(render(run_scenario(bare(ScenarioKind::TorusTopVsSmooth)), ReportFormat::Json));
    CHECK(parsed.at("verdict").at("facets").at("smooth solid torus") == false);
  }

  TEST_CASE("config parsing") {
    auto s = scenario_from_json(nlohmann::json::parse(R"({
      "scenario": "torus-solid", "n": 2, "knot_j": "trefoil",
      "knot_k": {"seifert": [[-1, 1], [0, -1]]},
      "hypotheses": []
    })"));
    CHECK(s.kind == ScenarioKind::TorusSolid);
    CHECK(run_scenario(s).verdict.kind == VerdictKind::Obstructed);
    CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(R"({"scenario": "sphere-lens", "r": 1})")), Error);
    CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(R"({"p": 5})")), Error);
    CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(
                        R"({"scenario": "sphere-smooth-h", "hypotheses": [{"name": "rho-y1", "value": 1}]})")),
                    Error);
    CHECK_THROWS_AS(scenario_from_json(nlohmann::json::parse(R"({"scenario": "sphere-lens", "p": "five"})")), Error);
  }
}

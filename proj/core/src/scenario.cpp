#include "obstruct/scenario.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <tuple>

#include "obstruct/forms.hpp"
#include "obstruct/json_int.hpp"
#include "obstruct/linking.hpp"
#include "obstruct/surgery.hpp"
#include "obstruct/twist.hpp"

namespace obstruct {

namespace {

struct NamedKind {
  const char* name;
  ScenarioKind kind;
};

constexpr NamedKind kKinds[] = {
    {"sphere-lens", ScenarioKind::SphereLens},
    {"sphere-smooth-h", ScenarioKind::SphereSmoothH},
    {"sphere-smooth-e8h", ScenarioKind::SphereSmoothE8H},
    {"torus-solid", ScenarioKind::TorusSolid},
    {"torus-top-vs-smooth", ScenarioKind::TorusTopVsSmooth},
    {"twist-extension", ScenarioKind::TwistExtension},
};

}  // namespace

std::string to_string(ScenarioKind k) {
  for (const auto& nk : kKinds)
    if (nk.kind == k) return nk.name;
  throw Error("unknown scenario kind");
}

ScenarioKind scenario_kind_from_string(const std::string& s) {
  for (const auto& nk : kKinds)
    if (s == nk.name) return nk.kind;
  std::string names;
  for (const auto& nk : kKinds) names += std::string(names.empty() ? "" : ", ") + nk.name;
  throw Error("unknown scenario '" + s + "' (expected one of: " + names + ")");
}

std::vector<std::string> scenario_names() {
  std::vector<std::string> out;
  for (const auto& nk : kKinds) out.emplace_back(nk.name);
  return out;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Obstructed: return "Obstructed";
    case VerdictKind::NotObstructed: return "NotObstructed";
    case VerdictKind::Extends: return "Extends";
    case VerdictKind::Mixed: return "Mixed";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "json") return ReportFormat::Json;
  throw Error("unknown format '" + s + "' (expected text or json)");
}

// ---------------------------------------------------------------------------
// Configuration

Scenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("scenario config must be a JSON object");
  require_only_keys(j,
                    {"scenario", "p", "q", "n", "knot_j", "knot_k", "hypotheses", "fronts",
                     "fox_milnor_degree_bound"},
                    "scenario config");
  if (!j.contains("scenario")) throw Error("scenario config: missing \"scenario\"");
  Scenario s;
  try {
    s.kind = scenario_kind_from_string(j.at("scenario").get<std::string>());
    if (j.contains("p")) s.p = j.at("p").get<long>();
    if (j.contains("q")) s.q = j.at("q").get<long>();
    if (j.contains("n")) s.n = j.at("n").get<long>();
    if (j.contains("knot_j")) s.knot_j = knot_from_json(j.at("knot_j"));
    if (j.contains("knot_k")) s.knot_k = knot_from_json(j.at("knot_k"));
    if (j.contains("fox_milnor_degree_bound")) s.fox_milnor_degree_bound = j.at("fox_milnor_degree_bound").get<long>();
    if (j.contains("fronts")) s.fronts = fronts_from_json(nlohmann::json{{"fronts", j.at("fronts")}});
    if (j.contains("hypotheses")) {
      for (const auto& h : j.at("hypotheses")) {
        require_only_keys(h, {"name", "value", "provenance"}, "hypothesis");
        if (!h.contains("name") || !h.contains("value") || !h.contains("provenance"))
          throw Error("hypothesis needs name, value and provenance");
        s.hypotheses.push_back({h.at("name").get<std::string>(), h.at("value"), h.at("provenance").get<std::string>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("scenario config: ") + e.what());
  }
  return s;
}

namespace {

// ---------------------------------------------------------------------------
// Hypotheses

const char* const kRohlinP = "rho(P) = rho(-P) = 1 for the Poincare homology sphere (classical; Rohlin)";

std::vector<Hypothesis> default_hypotheses(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::SphereSmoothH:
      return {{"rho-y1", 1, kRohlinP}, {"rho-y2", 1, kRohlinP}};
    case ScenarioKind::SphereSmoothE8H:
      return {
          {"rho-y1", 1, kRohlinP},
          {"rho-y2", 0, "rho is additive under connected sum: rho(P # P) = 1 + 1 = 0 mod 2"},
          {"y1-bounds-no-definite-e8", true,
           "Donaldson's diagonalization theorem: P bounds the negative definite E8 plumbing, so a smooth "
           "filling of -P with form E8 would close up to a definite manifold with non-diagonal form"},
          {"y2-bounds-no-acyclic", true,
           "P # P bounds no acyclic smooth 4-manifold (Fintushel-Stern, pseudofree orbifolds)"},
      };
    case ScenarioKind::TorusTopVsSmooth:
      return {
          {"alexander-one-topologically-slice", true,
           "knots with Alexander polynomial one are topologically slice (Freedman; Freedman-Quinn, "
           "Topology of 4-manifolds, 11.7B)"},
          {"surgered-manifold-irreducible", true,
           "the surgered manifold is 0-surgery on the Whitehead double, which is irreducible (Gabai, "
           "Foliations and the topology of 3-manifolds)"},
      };
    case ScenarioKind::TwistExtension:
      return {
          {"alpha-twist-extends", true,
           "the twist along the dotted meridian alpha extends over W (Gompf, Infinite order corks via "
           "handle diagrams)"},
          {"orbit-twist-extends", true,
           "the twist along a Seifert fibre of the torus knot exterior is isotopic to the identity through "
           "the circle action, so it extends over W"},
      };
    default:
      return {};
  }
}

std::vector<Hypothesis> merge_hypotheses(ScenarioKind k, const std::vector<Hypothesis>& overrides) {
  auto out = default_hypotheses(k);
  std::set<std::string> seen;
  for (const auto& o : overrides) {
    if (!seen.insert(o.name).second) throw Error("hypothesis '" + o.name + "' given twice");
    if (o.provenance.empty()) throw Error("hypothesis '" + o.name + "' has no provenance");
    auto it = std::find_if(out.begin(), out.end(), [&](const Hypothesis& h) { return h.name == o.name; });
    if (it == out.end()) throw Error("hypothesis '" + o.name + "' does not apply to scenario " + to_string(k));
    if (it->value.is_boolean() != o.value.is_boolean() || (!o.value.is_boolean() && !o.value.is_number_integer()))
      throw Error("hypothesis '" + o.name + "' expects a " + (it->value.is_boolean() ? "boolean" : "integer"));
    *it = o;
  }
  return out;
}

const Hypothesis& hypothesis(const Report& r, const std::string& name) {
  for (const auto& h : r.hypotheses)
    if (h.name == name) return h;
  throw Error("internal: missing hypothesis " + name);
}

bool flag(const Report& r, const std::string& name) { return hypothesis(r, name).value.get<bool>(); }
long integer(const Report& r, const std::string& name) { return hypothesis(r, name).value.get<long>(); }

// ---------------------------------------------------------------------------
// Parameter checks

void require(bool present, const std::string& what, ScenarioKind k) {
  if (!present) throw Error("scenario " + to_string(k) + " requires " + what);
}

void forbid(bool present, const std::string& what, ScenarioKind k) {
  if (present) throw Error("scenario " + to_string(k) + " does not take " + what);
}

void check_parameters(const Scenario& s) {
  const auto k = s.kind;
  const bool pq = k == ScenarioKind::SphereLens || k == ScenarioKind::TwistExtension;
  const bool knots = k == ScenarioKind::TorusSolid || k == ScenarioKind::TorusTopVsSmooth;
  if (pq) {
    require(s.p.has_value(), "--p", k);
    require(s.q.has_value(), "--q", k);
  } else {
    forbid(s.p.has_value(), "--p", k);
    forbid(s.q.has_value(), "--q", k);
  }
  if (!knots) {
    forbid(s.n.has_value(), "--n", k);
    forbid(s.knot_j.has_value(), "--knot-j", k);
    forbid(s.knot_k.has_value(), "--knot-k", k);
  }
  if (k == ScenarioKind::TorusSolid) {
    require(s.n.has_value(), "--n", k);
    require(s.knot_j.has_value(), "--knot-j", k);
    require(s.knot_k.has_value(), "--knot-k", k);
  }
  if (k != ScenarioKind::TorusTopVsSmooth) forbid(s.fronts.has_value(), "a Legendrian front fixture", k);
  if (s.fox_milnor_degree_bound < 0) throw Error("fox_milnor_degree_bound must be nonnegative");
}

// ---------------------------------------------------------------------------
// JSON fragments

ordered_json to_ojson(const Int& v) { return ordered_json(int_to_json(v)); }

ordered_json to_ojson(const IntMatrix& m) { return ordered_json(matrix_to_json(m)); }

ordered_json to_ojson(const TorusClass& c) { return ordered_json::array({to_ojson(c.x), to_ojson(c.y)}); }

ordered_json knot_echo(const Knot& k) {
  ordered_json j;
  j["name"] = k.label;
  j["seifert"] = to_ojson(k.seifert.matrix());
  return j;
}

ordered_json front_echo(const FrontData& f) {
  ordered_json j;
  j["writhe"] = f.writhe;
  j["down_cusps"] = f.down_cusps;
  j["up_cusps"] = f.up_cusps;
  return j;
}

ordered_json form_class_json(const EvenFormClass& c) {
  ordered_json j;
  j["e8"] = c.e8_count;
  j["h"] = c.h_count;
  j["form"] = c.to_string();
  j["rank"] = c.rank();
  j["signature"] = c.signature();
  return j;
}

ordered_json splitting_json(const Splitting& sp) {
  ordered_json j;
  j["first"] = form_class_json(sp.first);
  j["second"] = form_class_json(sp.second);
  return j;
}

ordered_json slice_json(const SliceVerdict& v) {
  ordered_json j;
  j["tag"] = to_string(v.tag);
  j["signature"] = v.signature;
  j["alexander"] = v.alexander.to_string();
  if (v.fox_milnor) {
    ordered_json fm;
    fm["passes"] = v.fox_milnor->passes;
    fm["determinant"] = to_ojson(v.fox_milnor->determinant);
    if (v.fox_milnor->factor) fm["factor"] = v.fox_milnor->factor->to_string();
    if (!v.fox_milnor->passes) fm["witness"] = v.fox_milnor->witness;
    j["fox_milnor"] = fm;
  }
  if (v.note) j["note"] = *v.note;
  j["witness"] = v.witness();
  return j;
}

std::string brace_set(const std::vector<long>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "}";
}

std::string quadratic_string(const SelfLinkingForm& q) {
  std::string out;
  for (const auto& [c, mono] : {std::pair{q.a, "x^2"}, std::pair{q.b, "xy"}, std::pair{q.c, "y^2"}}) {
    if (c == 0) continue;
    const Rational m = abs(c);
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (m != 1) out += m.get_str() + " ";
    out += mono;
  }
  return out.empty() ? "0" : out;
}

void step(Report& r, std::string op, ordered_json inputs, ordered_json output) {
  r.trace.push_back({std::move(op), std::move(inputs), std::move(output)});
}

void cite(Report& r, std::string claim, std::string source) {
  for (const auto& c : r.citations)
    if (c.claim == claim) return;
  r.citations.push_back({std::move(claim), std::move(source)});
}

// ---------------------------------------------------------------------------
// sphere-lens

void run_sphere_lens(const Scenario& s, Report& r) {
  const long p = *s.p;
  const long q = *s.q;
  if (p < 2) throw Error("sphere-lens: p must be at least 2");
  if (q <= 0 || q >= p || std::gcd(p, q) != 1) throw Error("sphere-lens: need 0 < q < p with gcd(p, q) = 1");

  std::set<long> squares;
  for (long k = 1; k < p; ++k)
    if (std::gcd(k, p) == 1) squares.insert(k * k % p);
  const std::vector<long> witness(squares.begin(), squares.end());
  const bool bounds = lens_qr_bounding(p, q);

  ordered_json in;
  in["p"] = p;
  in["q"] = q;
  ordered_json out;
  out["q_mod_p"] = q;
  out["minus_q_mod_p"] = p - q;
  out["unit_squares_mod_p"] = witness;
  out["q_or_minus_q_is_square"] = bounds;
  step(r, "lens_qr_bounding", in, out);

  cite(r,
       "a simply connected topological 4-manifold with b2 = 1 bounded by L(p,q) has form (+-p), and its "
       "boundary linking form -1/p must be isomorphic to that of L(p,q), -q/p; so +-q is a square mod p",
       "linking forms of rational homology spheres (Seifert; Kawauchi-Kojima)");
  cite(r, "an embedded 3-sphere bounding a ball would split off a simply connected filling of each side",
       "Freedman; Mayer-Vietoris");

  const std::string set = brace_set(witness);
  if (bounds) {
    r.verdict = {VerdictKind::NotObstructed,
                 std::to_string(q) + " or " + std::to_string(-q) + " is a square mod " + std::to_string(p) +
                     " (unit squares " + set + "); the residue test gives no obstruction",
                 {}};
  } else {
    r.verdict = {VerdictKind::Obstructed,
                 "neither " + std::to_string(q) + " nor " + std::to_string(-q) + " is a square mod " +
                     std::to_string(p) + " (unit squares " + set + "); L(" + std::to_string(p) + "," +
                     std::to_string(q) + ") bounds no simply connected b2 = 1 manifold, so no topological ball",
                 {}};
  }
}

// ---------------------------------------------------------------------------
// sphere-smooth-h / sphere-smooth-e8h

void run_sphere_smooth(const Scenario& s, Report& r) {
  const bool e8h = s.kind == ScenarioKind::SphereSmoothE8H;
  const SymUnimodularForm qw = e8h ? SymUnimodularForm::e8() + SymUnimodularForm::hyperbolic()
                                   : SymUnimodularForm::hyperbolic();
  const EvenFormClass total = classify_indefinite_even(qw);
  {
    ordered_json in;
    in["form"] = to_ojson(qw.matrix());
    step(r, "classify_indefinite_even", in, form_class_json(total));
  }

  const long rho1 = integer(r, "rho-y1");
  const long rho2 = integer(r, "rho-y2");
  const auto c1 = rohlin_constraint(static_cast<int>(rho1));
  const auto c2 = rohlin_constraint(static_cast<int>(rho2));
  for (const auto& [label, rho, c] : {std::tuple{"y1", rho1, c1}, std::tuple{"y2", rho2, c2}}) {
    ordered_json in;
    in["side"] = label;
    in["rho"] = rho;
    ordered_json out;
    out["signature_residue_mod_16"] = c.residue;
    out["constraint"] = c.to_string();
    step(r, "rohlin_constraint", in, out);
  }

  const auto splittings = enumerate_even_splittings(total, c1, c2);
  {
    ordered_json in;
    in["total"] = total.to_string();
    in["first"] = c1.to_string();
    in["second"] = c2.to_string();
    ordered_json out = ordered_json::array();
    for (const auto& sp : splittings) out.push_back(splitting_json(sp));
    step(r, "enumerate_even_splittings", in, out);
  }
  cite(r, "an even form bounded by a homology sphere with Rohlin invariant rho has signature 8 rho mod 16",
       "Rohlin's theorem");
  cite(r, "indefinite even unimodular forms are classified by rank and signature (a E8 + b H)",
       "Milnor-Husemoller, Symmetric bilinear forms");
  cite(r, "a smoothly embedded homology sphere bounding a ball splits the form of W orthogonally",
       "Mayer-Vietoris");

  std::vector<Splitting> remaining;
  if (e8h) {
    const bool donaldson = flag(r, "y1-bounds-no-definite-e8");
    const bool acyclic = flag(r, "y2-bounds-no-acyclic");
    for (const auto& sp : splittings) {
      std::string reason;
      if (donaldson && sp.first.h_count == 0 && sp.first.e8_count != 0)
        reason = "y1-bounds-no-definite-e8";
      else if (acyclic && sp.second.rank() == 0)
        reason = "y2-bounds-no-acyclic";
      ordered_json out;
      out["excluded"] = !reason.empty();
      if (!reason.empty()) out["by_hypothesis"] = reason;
      step(r, "exclude_splitting", splitting_json(sp), out);
      if (reason.empty()) remaining.push_back(sp);
    }
  } else {
    remaining = splittings;
  }

  if (remaining.empty()) {
    r.verdict = {VerdictKind::Obstructed,
                 splittings.empty()
                     ? "no even splitting of " + total.to_string() + " satisfies the Rohlin constraints; no smooth ball"
                     : "every even splitting of " + total.to_string() +
                           " is excluded by the cited hypotheses; no smooth ball",
                 {}};
  } else {
    r.verdict = {VerdictKind::Inconclusive,
                 std::to_string(remaining.size()) + " splitting(s) of " + total.to_string() +
                     " survive; a smooth ball is not excluded",
                 {}};
  }
}

// ---------------------------------------------------------------------------
// torus-solid core

struct TorusBranches {
  ZeroClasses zeros;
  SliceVerdict beta;   // class [beta]: -J
  SliceVerdict alpha;  // class [alpha] + n[beta]: K # J_{n,1}
};

TorusBranches torus_solid_steps(Report& r, const Knot& j, const Knot& k, long n, long bound,
                                const std::string& prefix) {
  const auto pres = torus_example_presentation(Int(n));
  const IntMatrix b = boundary_linking_matrix(pres);
  {
    ordered_json in;
    in["presentation"] = serialize(pres);
    ordered_json out;
    out["linking_matrix"] = to_ojson(b);
    step(r, prefix + "boundary_linking_matrix", in, out);
  }
  const auto h = first_homology(b);
  {
    ordered_json in;
    in["linking_matrix"] = to_ojson(b);
    ordered_json out;
    out["h1"] = h.describe();
    out["homology_sphere"] = h.is_homology_sphere;
    step(r, prefix + "first_homology", in, out);
  }
  const auto basis = torus_basis(pres, "alpha", "beta");
  const auto q = self_linking_form(b, basis);
  {
    ordered_json in;
    in["curves"] = ordered_json::array({"alpha", "beta"});
    ordered_json out;
    out["a"] = q.a.get_str();
    out["b"] = q.b.get_str();
    out["c"] = q.c.get_str();
    out["form"] = quadratic_string(q);
    step(r, prefix + "self_linking_form", in, out);
  }
  const auto z = zero_classes(q);
  {
    ordered_json in;
    in["form"] = ordered_json::array({q.a.get_str(), q.b.get_str(), q.c.get_str()});
    ordered_json out;
    out["all_classes"] = z.all_classes;
    out["classes"] = ordered_json::array();
    for (const auto& c : z.classes) out["classes"].push_back(to_ojson(c));
    step(r, prefix + "zero_classes", in, out);
  }
  const std::vector<TorusClass> expected = [&] {
    std::vector<TorusClass> e{canonical_sign({0, 1}), canonical_sign({1, n})};
    std::sort(e.begin(), e.end(), [](const TorusClass& a, const TorusClass& c) {
      return a.x != c.x ? a.x < c.x : a.y < c.y;
    });
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
  }();
  auto same_set = [](std::vector<TorusClass> a, std::vector<TorusClass> e) {
    if (a.size() != e.size()) return false;
    for (const auto& c : e)
      if (std::find(a.begin(), a.end(), c) == a.end()) return false;
    return true;
  };
  if (z.all_classes || !same_set(z.classes, expected))
    throw Error("torus-solid: unexpected zero classes for the model presentation");
  cite(r, "linking numbers in the surgered boundary: lk_Y = lk_S3 - a B^-1 b^T", "Hoste, linking numbers in 3-manifolds");
  cite(r, "the core of an embedded solid torus is a class with zero self-linking", "definition of the framing");

  TorusBranches out{z, {}, {}};
  const SeifertMatrix minus_j = concordance_inverse(j.seifert);
  out.beta = algebraic_slice_verdict(minus_j, bound);
  {
    ordered_json in;
    in["class"] = ordered_json::array({0, 1});
    in["knot"] = "-(" + j.label + ")";
    in["seifert"] = to_ojson(minus_j.matrix());
    step(r, prefix + "algebraic_slice_verdict", in, slice_json(out.beta));
  }
  const SeifertMatrix alpha_form = n == 0 ? k.seifert : connected_sum(k.seifert, parallel_cable(j.seifert, n));
  out.alpha = algebraic_slice_verdict(alpha_form, bound);
  {
    ordered_json in;
    in["class"] = ordered_json::array({1, n});
    in["knot"] = n == 0 ? k.label : k.label + " # (" + std::to_string(n) + ",1)-cable of " + j.label;
    in["seifert"] = to_ojson(alpha_form.matrix());
    step(r, prefix + "algebraic_slice_verdict", in, slice_json(out.alpha));
  }
  cite(r, "a nonzero signature or a failed Fox-Milnor factorization obstructs sliceness in a homology ball",
       "Murasugi; Levine; Fox-Milnor");
  return out;
}

void run_torus_solid(const Scenario& s, Report& r) {
  const auto br = torus_solid_steps(r, *s.knot_j, *s.knot_k, *s.n, s.fox_milnor_degree_bound, "");
  if (br.beta.obstructed() && br.alpha.obstructed()) {
    r.verdict = {VerdictKind::Obstructed,
                 "neither -J nor K # J_{n,1} is algebraically slice (" + br.beta.witness() + "; " +
                     br.alpha.witness() + "); no embedded solid torus",
                 {}};
  } else {
    std::string open;
    if (!br.beta.obstructed()) open += "the [beta] branch";
    if (!br.alpha.obstructed()) open += std::string(open.empty() ? "" : " and ") + "the [alpha] + n[beta] branch";
    r.verdict = {VerdictKind::Inconclusive, "no algebraic obstruction on " + open, {}};
  }
}

// ---------------------------------------------------------------------------
// torus-top-vs-smooth

const FrontData& front(const std::map<std::string, FrontData>& fronts, const std::string& name) {
  auto it = fronts.find(name);
  if (it == fronts.end()) throw Error("front fixture has no entry '" + name + "'");
  return it->second;
}

void run_torus_top_vs_smooth(const Scenario& s, Report& r) {
  const Knot k = s.knot_k.value_or(knot_by_name("whitehead-double+"));
  const Knot j = s.knot_j.value_or(knot_by_name("left-trefoil"));
  const long n = s.n.value_or(0);
  if (n != 0) throw Error("torus-top-vs-smooth: the Stein diagram is for n = 0");
  const auto fronts = s.fronts.value_or(builtin_fronts());

  const auto br = torus_solid_steps(r, j, k, n, s.fox_milnor_degree_bound, "");

  // topological side
  const LaurentPoly delta = alexander_polynomial(k.seifert);
  const bool delta_one = delta == LaurentPoly::constant(1);
  {
    ordered_json in;
    in["knot"] = k.label;
    ordered_json out;
    out["alexander"] = delta.to_string();
    out["is_one"] = delta_one;
    step(r, "alexander_polynomial", in, out);
  }
  const bool class_nonzero = std::any_of(br.zeros.classes.begin(), br.zeros.classes.end(),
                                         [](const TorusClass& c) { return c.x != 0; });
  const bool slice = delta_one && flag(r, "alexander-one-topologically-slice");
  const bool irreducible = flag(r, "surgered-manifold-irreducible");
  const bool topological = class_nonzero && slice && irreducible;
  {
    ordered_json in;
    in["class"] = ordered_json::array({1, n});
    ordered_json out;
    out["class_nonzero"] = class_nonzero;
    out["topologically_slice"] = slice;
    out["surgered_manifold_irreducible"] = irreducible;
    out["solid_torus"] = topological;
    step(r, "solid_torus_checklist", in, out);
  }
  cite(r,
       "a nonzero zero-self-linking class that is topologically slice in W, with irreducible surgered "
       "manifold, yields a topologically embedded solid torus",
       "Dehn's lemma for tori via surgery and Freedman's disk embedding theorem");

  // smooth side
  const std::vector<FramedHandle> handles{{"L1", -1, front(fronts, "L1")}, {"L2", 0, front(fronts, "L2")}};
  const auto stein = stein_condition(handles);
  {
    ordered_json in = ordered_json::array();
    for (const auto& hd : handles) {
      ordered_json e;
      e["label"] = hd.label;
      e["framing"] = hd.framing;
      e["front"] = front_echo(hd.front);
      in.push_back(e);
    }
    ordered_json out;
    out["satisfied"] = stein.satisfied;
    out["handles"] = ordered_json::array();
    for (const auto& c : stein.handles) {
      ordered_json e;
      e["label"] = c.label;
      e["framing"] = c.framing;
      e["tb"] = c.tb;
      e["satisfied"] = c.satisfied;
      out["handles"].push_back(e);
    }
    step(r, "stein_condition", in, out);
  }
  const FrontData& fa = front(fronts, "alpha");
  const long tba = tb(fa);
  const long rota = rot(fa);
  const long genus = slice_bennequin_genus_bound(tba, rota);
  {
    ordered_json in;
    in["curve"] = "alpha";
    in["front"] = front_echo(fa);
    in["tb"] = tba;
    in["rot"] = rota;
    ordered_json out;
    out["genus_lower_bound"] = genus;
    step(r, "slice_bennequin_genus_bound", in, out);
  }
  cite(r, "Legendrian 2-handles attached with framing tb - 1 give a Stein domain", "Eliashberg; Gompf, handlebody construction of Stein surfaces");
  cite(r, "a Legendrian knot in the boundary of a Stein domain satisfies tb + |rot| <= 2 g_4 - 1",
       "slice-Bennequin inequality (Akbulut-Matveyev; Lisca-Matic)");

  const bool alpha_not_smooth = stein.satisfied && genus >= 1;
  const bool beta_not_smooth = br.beta.signature != 0;
  const bool smooth_obstructed = alpha_not_smooth && beta_not_smooth;

  if (topological && smooth_obstructed) {
    r.verdict = {VerdictKind::Mixed,
                 "T bounds a topologically embedded solid torus but no smooth one: alpha has genus bound " +
                     std::to_string(genus) + " and -J has signature " + std::to_string(br.beta.signature),
                 {{"topological solid torus", true}, {"smooth solid torus", false}}};
  } else if (smooth_obstructed) {
    r.verdict = {VerdictKind::Obstructed,
                 "no smooth solid torus (alpha genus bound " + std::to_string(genus) + ", -J signature " +
                     std::to_string(br.beta.signature) + "); the topological checklist is incomplete",
                 {}};
  } else {
    r.verdict = {VerdictKind::Inconclusive,
                 std::string("smooth obstruction incomplete") +
                     (topological ? "; the topological checklist holds" : "; the topological checklist is incomplete"),
                 {}};
  }
}

// ---------------------------------------------------------------------------
// twist-extension

void run_twist_extension(const Scenario& s, Report& r) {
  const long p = *s.p;
  const long q = *s.q;
  const TwistClass orbit = seifert_orbit_class(p, q);
  {
    ordered_json in;
    in["p"] = p;
    in["q"] = q;
    ordered_json out;
    out["class"] = orbit.to_string();
    out["mu_lambda"] = ordered_json::array({to_ojson(orbit.x), to_ojson(orbit.y)});
    step(r, "seifert_orbit_class", in, out);
  }
  const TwistClass orbit_ab = to_alpha_beta(orbit);
  {
    ordered_json in;
    in["mu_lambda"] = ordered_json::array({to_ojson(orbit.x), to_ojson(orbit.y)});
    ordered_json out;
    out["class"] = orbit_ab.to_string();
    out["alpha_beta"] = ordered_json::array({to_ojson(orbit_ab.x), to_ojson(orbit_ab.y)});
    step(r, "to_alpha_beta", in, out);
  }
  std::vector<TwistClass> gens;
  ordered_json gen_json = ordered_json::array();
  if (flag(r, "alpha-twist-extends")) {
    gens.push_back({1, 0, TorusBasis::AlphaBeta});
    gen_json.push_back(ordered_json::array({1, 0}));
  }
  if (flag(r, "orbit-twist-extends")) {
    gens.push_back(orbit_ab);
    gen_json.push_back(ordered_json::array({to_ojson(orbit_ab.x), to_ojson(orbit_ab.y)}));
  }
  const Subgroup2 sub = extension_subgroup(gens);
  {
    ordered_json in;
    in["generators"] = gen_json;
    ordered_json out;
    out["hermite_form"] = to_ojson(sub.generators);
    out["rank"] = sub.rank;
    out["index"] = sub.index ? to_ojson(*sub.index) : ordered_json(nullptr);
    out["subgroup"] = sub.to_string();
    step(r, "extension_subgroup", in, out);
  }
  cite(r, "twists compose by adding classes in H_1(T), so extending twists form a subgroup", "Dehn twists on a torus");

  const Knot tpq = knot_by_name("T(" + std::to_string(p) + "," + std::to_string(q) + ")");
  const auto br = torus_solid_steps(r, tpq, knot_by_name("unknot"), -1, s.fox_milnor_degree_bound, "companion: ");
  const bool obstructed = br.beta.obstructed() && br.alpha.obstructed();
  cite(r, "nontrivial torus knots have nonzero signature or fail Fox-Milnor, so are never algebraically slice",
       "Litherland; Murasugi");

  const std::string torus_summary = "T(" + std::to_string(p) + "," + std::to_string(q) + ") companion: " +
                                    (obstructed ? "no embedded solid torus (signature " +
                                                      std::to_string(br.beta.signature) + ")"
                                                : "no obstruction");
  if (sub.is_everything() && obstructed) {
    r.verdict = {VerdictKind::Mixed,
                 "every Dehn twist along T extends over W (subgroup Z^2) yet T bounds no smooth solid torus; " +
                     torus_summary,
                 {{"all twists extend", true}, {"smooth solid torus", false}}};
  } else if (sub.is_everything()) {
    r.verdict = {VerdictKind::Extends, "every Dehn twist along T extends over W; " + torus_summary, {}};
  } else {
    r.verdict = {VerdictKind::Inconclusive, "extension subgroup " + sub.to_string() + "; " + torus_summary, {}};
  }
}

ordered_json scenario_echo(const Scenario& s) {
  ordered_json j;
  j["name"] = to_string(s.kind);
  if (s.p) j["p"] = *s.p;
  if (s.q) j["q"] = *s.q;
  const bool torus = s.kind == ScenarioKind::TorusSolid || s.kind == ScenarioKind::TorusTopVsSmooth;
  if (s.kind == ScenarioKind::TorusTopVsSmooth) {
    j["n"] = s.n.value_or(0);
    j["knot_j"] = knot_echo(s.knot_j.value_or(knot_by_name("left-trefoil")));
    j["knot_k"] = knot_echo(s.knot_k.value_or(knot_by_name("whitehead-double+")));
    ordered_json f;
    for (const auto& [name, fd] : s.fronts.value_or(builtin_fronts())) f[name] = front_echo(fd);
    j["fronts"] = f;
  } else if (torus) {
    j["n"] = *s.n;
    j["knot_j"] = knot_echo(*s.knot_j);
    j["knot_k"] = knot_echo(*s.knot_k);
  }
  if (torus || s.kind == ScenarioKind::TwistExtension) j["fox_milnor_degree_bound"] = s.fox_milnor_degree_bound;
  return j;
}

}  // namespace

Report run_scenario(const Scenario& s) {
  check_parameters(s);
  Report r;
  r.hypotheses = merge_hypotheses(s.kind, s.hypotheses);
  r.scenario = scenario_echo(s);
  try {
    switch (s.kind) {
      case ScenarioKind::SphereLens: run_sphere_lens(s, r); break;
      case ScenarioKind::SphereSmoothH:
      case ScenarioKind::SphereSmoothE8H: run_sphere_smooth(s, r); break;
      case ScenarioKind::TorusSolid: run_torus_solid(s, r); break;
      case ScenarioKind::TorusTopVsSmooth: run_torus_top_vs_smooth(s, r); break;
      case ScenarioKind::TwistExtension: run_twist_extension(s, r); break;
    }
  } catch (const Error& e) {
    throw Error(to_string(s.kind) + ": " + e.what());
  }
  return r;
}

std::vector<Report> run_scenarios(const std::vector<Scenario>& scenarios) {
  std::vector<std::future<Report>> futures;
  futures.reserve(scenarios.size());
  for (const auto& s : scenarios) futures.push_back(std::async(std::launch::async, [&s] { return run_scenario(s); }));
  std::vector<Report> out;
  out.reserve(scenarios.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["scenario"] = r.scenario;
  j["trace"] = ordered_json::array();
  for (const auto& st : r.trace) {
    ordered_json e;
    e["operation"] = st.operation;
    e["inputs"] = st.inputs;
    e["output"] = st.output;
    j["trace"].push_back(e);
  }
  j["hypotheses"] = ordered_json::array();
  for (const auto& h : r.hypotheses) {
    ordered_json e;
    e["name"] = h.name;
    e["value"] = ordered_json(h.value);
    e["provenance"] = h.provenance;
    j["hypotheses"].push_back(e);
  }
  j["citations"] = ordered_json::array();
  for (const auto& c : r.citations) {
    ordered_json e;
    e["claim"] = c.claim;
    e["source"] = c.source;
    j["citations"].push_back(e);
  }
  ordered_json v;
  v["kind"] = to_string(r.verdict.kind);
  v["summary"] = r.verdict.summary;
  if (r.verdict.kind == VerdictKind::Mixed) {
    ordered_json f;
    for (const auto& [name, holds] : r.verdict.facets) f[name] = holds;
    v["facets"] = f;
  }
  j["verdict"] = v;
  return j;
}

std::string render(const Report& r, ReportFormat format) {
  if (format == ReportFormat::Json) return report_to_json(r).dump(2) + "\n";

  std::string out;
  out += "scenario: " + r.scenario.at("name").get<std::string>() + "\n";
  for (const auto& [key, value] : r.scenario.items()) {
    if (key == "name") continue;
    out += "  " + key + ": " + value.dump() + "\n";
  }
  out += "\ncomputed:\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto& st = r.trace[i];
    out += "  " + std::to_string(i + 1) + ". " + st.operation + "\n";
    out += "     in:  " + st.inputs.dump() + "\n";
    out += "     out: " + st.output.dump() + "\n";
  }
  if (!r.hypotheses.empty()) {
    out += "\nhypotheses (imported, not computed):\n";
    for (const auto& h : r.hypotheses)
      out += "  - " + h.name + " = " + h.value.dump() + "\n      " + h.provenance + "\n";
  }
  if (!r.citations.empty()) {
    out += "\ncitations:\n";
    for (const auto& c : r.citations) out += "  - " + c.claim + "\n      [" + c.source + "]\n";
  }
  out += "\nverdict: " + to_string(r.verdict.kind);
  if (r.verdict.kind == VerdictKind::Mixed) {
    out += " (";
    for (std::size_t i = 0; i < r.verdict.facets.size(); ++i)
      out += (i ? ", " : "") + r.verdict.facets[i].first + ": " + (r.verdict.facets[i].second ? "yes" : "no");
    out += ")";
  }
  out += "\n  " + r.verdict.summary + "\n";
  return out;
}

}  // namespace obstruct

#include "obstruct/knots.hpp"

#include <regex>

#include "obstruct/json_int.hpp"

namespace obstruct {

std::vector<std::string> builtin_knot_names() {
  return {"unknot",
          "trefoil",
          "right-trefoil",
          "left-trefoil",
          "figure-eight",
          "stevedore",
          "whitehead-double+",
          "whitehead-double-",
          "T(p,q)",
          "twist(m)"};
}

namespace {

Knot torus(long p, long q) {
  return {"T(" + std::to_string(p) + "," + std::to_string(q) + ")", torus_knot_seifert(p, q)};
}

}  // namespace

Knot knot_by_name(const std::string& name) {
  if (name == "unknot") return {name, SeifertMatrix{}};
  if (name == "trefoil" || name == "right-trefoil") return {name, torus_knot_seifert(2, 3)};
  if (name == "left-trefoil") return {name, torus_knot_seifert(2, -3)};
  if (name == "figure-eight") return {name, SeifertMatrix(IntMatrix{{1, 1}, {0, -1}})};
  if (name == "stevedore") return {name, twist_knot_seifert(2)};
  if (name == "whitehead-double+" || name == "positive-whitehead-double")
    return {name, whitehead_double_seifert(Clasp::Positive)};
  if (name == "whitehead-double-" || name == "negative-whitehead-double")
    return {name, whitehead_double_seifert(Clasp::Negative)};

  static const std::regex torus_re(R"(^(?:T|torus)\((-?\d+),\s*(-?\d+)\)$)");
  static const std::regex twist_re(R"(^twist\((-?\d+)\)$)");
  std::smatch m;
  if (std::regex_match(name, m, torus_re)) return torus(std::stol(m[1]), std::stol(m[2]));
  if (std::regex_match(name, m, twist_re)) return {name, twist_knot_seifert(std::stol(m[1]))};
  throw Error("unknown knot '" + name + "'");
}

Knot knot_from_json(const nlohmann::json& spec) {
  if (spec.is_string()) return knot_by_name(spec.get<std::string>());
  require_only_keys(spec, {"name", "seifert", "torus", "twist", "whitehead"}, "knot");
  const int families = static_cast<int>(spec.contains("seifert")) + static_cast<int>(spec.contains("torus")) +
                       static_cast<int>(spec.contains("twist")) + static_cast<int>(spec.contains("whitehead"));
  if (families > 1) throw Error("knot: give exactly one of seifert, torus, twist, whitehead");
  if (families == 0) {
    if (!spec.contains("name")) throw Error("knot: empty specification");
    return knot_by_name(spec.at("name").get<std::string>());
  }
  Knot k;
  if (spec.contains("seifert")) {
    k = {"seifert", SeifertMatrix(matrix_from_json(spec.at("seifert")))};
  } else if (spec.contains("torus")) {
    const auto& t = spec.at("torus");
    if (!t.is_array() || t.size() != 2) throw Error("knot: torus needs [p, q]");
    k = torus(t[0].get<long>(), t[1].get<long>());
  } else if (spec.contains("twist")) {
    const long m = spec.at("twist").get<long>();
    k = {"twist(" + std::to_string(m) + ")", twist_knot_seifert(m)};
  } else {
    const auto s = spec.at("whitehead").get<std::string>();
    if (s != "+" && s != "-") throw Error("knot: whitehead clasp must be \"+\" or \"-\"");
    k = {"whitehead-double" + s, whitehead_double_seifert(s == "+" ? Clasp::Positive : Clasp::Negative)};
  }
  if (spec.contains("name")) k.label = spec.at("name").get<std::string>();
  return k;
}

Knot parse_knot_spec(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(std::string("knot: invalid JSON: ") + e.what());
    }
    return knot_from_json(j);
  }
  return knot_by_name(text);
}

nlohmann::json knot_to_json(const Knot& k) {
  return {{"name", k.label}, {"seifert", matrix_to_json(k.seifert.matrix())}};
}

}  // namespace obstruct

#pragma once

// Built-in knot table and the JSON knot specification.
//
//   "trefoil" | "left-trefoil" | "figure-eight" | "T(2,5)" | ...   (names)
//   {"name": "J", "seifert": [[-1, 1], [0, -1]]}                    (explicit)
//   {"torus": [2, 3]}  {"twist": 2}  {"whitehead": "+"}             (families)

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "obstruct/seifert.hpp"

namespace obstruct {

struct Knot {
  std::string label;
  SeifertMatrix seifert;
};

/// Names accepted by knot_by_name (T(p,q) and twist(m) are patterns).
std::vector<std::string> builtin_knot_names();

Knot knot_by_name(const std::string& name);
Knot knot_from_json(const nlohmann::json& spec);

/// A name, a family pattern, or an inline JSON object.
Knot parse_knot_spec(const std::string& text);

nlohmann::json knot_to_json(const Knot& k);

}  // namespace obstruct

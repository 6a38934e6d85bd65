#pragma once

// Surgery presentations: framed and dotted link components in S^3 together
// with curves in the boundary of the resulting 4-manifold, described by their
// S^3 linking data.
//
// Text format (one record per line, '#' starts a comment):
//
//   component <id> dotted
//   component <id> framed <int>
//   lk <id> <id> <int>
//   curve <id> lk ( <int> ... ) self <int>
//   pushoff <curveA> <curveB> <int> <int>
//
// The pushoff record gives lk(A, B+) and lk(B, A+) in that order. Linking
// numbers not declared are zero.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "obstruct/matrix.hpp"

namespace obstruct {

enum class ComponentKind { Dotted, Framed };

struct ComponentRecord {
  std::string id;
  ComponentKind kind = ComponentKind::Framed;
  std::optional<Int> framing;
};

struct LinkingRecord {
  std::string a;
  std::string b;
  Int value;
};

/// (lk(this, other+), lk(other, this+))
struct PushoffPair {
  Int this_with_other_pushoff;
  Int other_with_this_pushoff;
};

struct CurveSpec {
  std::string id;
  std::vector<Int> component_linkings;
  Int pushoff_self_linking;
  std::map<std::string, PushoffPair> cross_pushoff_linkings;
};

/// Declared data. Nothing is checked on construction; parse_presentation and
/// from_json only return presentations for which validate() is empty.
struct SurgeryPresentation {
  std::vector<ComponentRecord> components;
  std::vector<LinkingRecord> linkings;
  std::vector<CurveSpec> curves;

  std::optional<std::size_t> component_index(std::string_view id) const;
  const CurveSpec* curve(std::string_view id) const;

  /// S^3 linking number of two distinct components (0 when undeclared).
  Int linking(std::size_t i, std::size_t j) const;

  /// lk(a, b+) read from whichever side declared it.
  std::optional<Int> pushoff_linking(std::string_view a, std::string_view b) const;
};

struct TorusCurveBasis {
  CurveSpec alpha;
  CurveSpec beta;
  Int alpha_with_beta_pushoff;  // lk(alpha, beta+)
  Int beta_with_alpha_pushoff;  // lk(beta, alpha+)
};

SurgeryPresentation parse_presentation(std::string_view text);
std::string serialize(const SurgeryPresentation& pres);

nlohmann::json to_json(const SurgeryPresentation& pres);
SurgeryPresentation presentation_from_json(const nlohmann::json& j);

std::vector<std::string> validate(const SurgeryPresentation& pres);

/// Framings on the diagonal (dotted components read as 0), S^3 linking numbers
/// off the diagonal, indexed in declaration order. Throws on invalid input.
IntMatrix boundary_linking_matrix(const SurgeryPresentation& pres);

TorusCurveBasis torus_basis(const SurgeryPresentation& pres, std::string_view alpha_id,
                            std::string_view beta_id);

/// Dotted L1 and n-framed L2 linking once, with meridian alpha and longitude
/// beta of the separating torus: lk(alpha, L1) = lk(beta, L2) = 1, all pushoff
/// self-linkings 0, lk(alpha, beta+) = 0 and lk(beta, alpha+) = 1.
SurgeryPresentation torus_example_presentation(const Int& n);

}  // namespace obstruct

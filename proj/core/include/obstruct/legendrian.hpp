#pragma once

// Legendrian fronts reduced to the counts that determine tb and rot.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "obstruct/error.hpp"

namespace obstruct {

struct FrontData {
  long writhe = 0;
  long down_cusps = 0;
  long up_cusps = 0;

  /// Cusp total even and at least 2.
  bool valid() const;
  /// One extra down/up cusp pair per call, with the sign of the rotation change.
  FrontData stabilized(bool positive) const;
};

long tb(const FrontData& front);
long rot(const FrontData& front);

struct HandleCheck {
  std::string label;
  long framing = 0;
  long tb = 0;
  bool satisfied = false;  // framing == tb - 1
};

struct SteinReport {
  bool satisfied = true;
  std::vector<HandleCheck> handles;
};

struct FramedHandle {
  std::string label;
  long framing = 0;
  FrontData front;
};

SteinReport stein_condition(const std::vector<FramedHandle>& handles);

/// Smallest g >= 0 with tb + |rot| <= 2g - 1. Zero means no obstruction.
long slice_bennequin_genus_bound(long tb, long rot);

/// Named fronts. The built-in set reproduces tb(L1) = 0, tb(L2) = 1 and
/// tb(alpha) = rot(alpha) = 0 for the Stein diagram of the Whitehead-double
/// example; the counts are chosen to match those invariants, not read off a
/// picture.
std::map<std::string, FrontData> builtin_fronts();
std::map<std::string, FrontData> fronts_from_json(const nlohmann::json& j);
nlohmann::json fronts_to_json(const std::map<std::string, FrontData>& fronts);

}  // namespace obstruct

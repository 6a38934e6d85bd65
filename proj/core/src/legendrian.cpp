#include "obstruct/legendrian.hpp"

#include <cstdlib>

#include "obstruct/json_int.hpp"

namespace obstruct {

bool FrontData::valid() const {
  const long cusps = down_cusps + up_cusps;
  return down_cusps >= 0 && up_cusps >= 0 && cusps >= 2 && cusps % 2 == 0;
}

FrontData FrontData::stabilized(bool positive) const {
  FrontData f = *this;
  // A zig-zag adds two cusps of the same orientation class: both down for a
  // positive stabilization, both up for a negative one.
  if (positive)
    f.down_cusps += 2;
  else
    f.up_cusps += 2;
  return f;
}

namespace {

void require_valid(const FrontData& f) {
  if (!f.valid()) throw Error("front needs a nonnegative, even cusp count of at least 2");
}

}  // namespace

long tb(const FrontData& front) {
  require_valid(front);
  return front.writhe - (front.down_cusps + front.up_cusps) / 2;
}

long rot(const FrontData& front) {
  require_valid(front);
  const long diff = front.down_cusps - front.up_cusps;
  if (diff % 2 != 0) throw Error("down and up cusp counts must have the same parity");
  return diff / 2;
}

SteinReport stein_condition(const std::vector<FramedHandle>& handles) {
  SteinReport r;
  for (const auto& h : handles) {
    HandleCheck c{h.label, h.framing, tb(h.front), false};
    c.satisfied = c.framing == c.tb - 1;
    r.satisfied = r.satisfied && c.satisfied;
    r.handles.push_back(std::move(c));
  }
  return r;
}

long slice_bennequin_genus_bound(long tb_value, long rot_value) {
  // 2g >= tb + |rot| + 1
  const long need = tb_value + std::labs(rot_value) + 1;
  if (need <= 0) return 0;
  return (need + 1) / 2;
}

std::map<std::string, FrontData> builtin_fronts() {
  return {
      {"L1", FrontData{1, 1, 1}},
      {"L2", FrontData{2, 1, 1}},
      {"alpha", FrontData{1, 1, 1}},
      {"unknot", FrontData{0, 1, 1}},
  };
}

std::map<std::string, FrontData> fronts_from_json(const nlohmann::json& j) {
  require_only_keys(j, {"fronts"}, "front fixture");
  std::map<std::string, FrontData> out;
  for (const auto& [name, jf] : j.at("fronts").items()) {
    require_only_keys(jf, {"writhe", "down_cusps", "up_cusps", "note"}, "front '" + name + "'");
    FrontData f{jf.at("writhe").get<long>(), jf.at("down_cusps").get<long>(), jf.at("up_cusps").get<long>()};
    require_valid(f);
    out.emplace(name, f);
  }
  return out;
}

nlohmann::json fronts_to_json(const std::map<std::string, FrontData>& fronts) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, f] : fronts)
    j[name] = {{"writhe", f.writhe}, {"down_cusps", f.down_cusps}, {"up_cusps", f.up_cusps}};
  return {{"fronts", j}};
}

}  // namespace obstruct

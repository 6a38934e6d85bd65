#include "obstruct/json_int.hpp"

#include <algorithm>

namespace obstruct {

nlohmann::json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0) throw Error("not an integer: \"" + s + "\"");
    return v;
  }
  throw Error("expected an integer, got " + j.dump());
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(int_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error("matrix must be an array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error("matrix row must be an array");
    std::vector<Int> r;
    for (const auto& v : row) r.push_back(int_from_json(v));
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

void require_only_keys(const nlohmann::json& j, std::initializer_list<std::string_view> allowed,
                       std::string_view context) {
  if (!j.is_object()) throw Error(std::string(context) + ": expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw Error(std::string(context) + ": unknown field '" + key + "'");
}

}  // namespace obstruct

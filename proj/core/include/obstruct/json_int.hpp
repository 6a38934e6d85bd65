#pragma once

// JSON helpers shared by the serializers. Integers that fit in 64 bits are
// written as JSON numbers, larger ones as decimal strings; both are accepted
// on input.

#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "obstruct/matrix.hpp"

namespace obstruct {

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

/// Throws Error naming the first key of `j` that is not in `allowed`.
void require_only_keys(const nlohmann::json& j, std::initializer_list<std::string_view> allowed,
                       std::string_view context);

}  // namespace obstruct

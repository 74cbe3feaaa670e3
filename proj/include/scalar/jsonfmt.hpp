#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scalar/numkernel.hpp"

namespace scalar {

/// Deterministic JSON text: keys sorted, two-space indent, scalar arrays on one line,
/// floating point numbers as %.12g.
std::string emit_json(const nlohmann::json& j);

nlohmann::json to_json(const Vec& v);
nlohmann::json to_json(const std::vector<Vec>& vs);

}  // namespace scalar

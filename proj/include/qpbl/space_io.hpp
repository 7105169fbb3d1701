#pragma once

#include <string>

#include <json.hpp>

#include "qpbl/space.hpp"

namespace qpbl {

/// Finite-space file format:
///   { "name": str, "points": [labels], "matrix": [[entry]], "s": entry }
/// where entry is a nonnegative JSON number or an exact-fraction string
/// such as "8/7". matrix[i][j] = dist(points[i], points[j]). Duplicate
/// labels are rejected. Numbers are read exactly (every finite double is
/// a dyadic rational).
Space space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const Space& space);

Space load_space(const std::string& path);
void save_space(const Space& space, const std::string& path);

}  // namespace qpbl

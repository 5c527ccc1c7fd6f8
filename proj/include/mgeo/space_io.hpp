#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mgeo/space.hpp"

namespace mgeo {

struct SpaceDefinition {
  NormedSpace space;
  std::optional<std::vector<Vector>> basis;
};

/// Space from a JSON document:
///   {"type": "lp", "p": 3, "dim": 2}            (p may be "inf")
///   {"type": "polyhedral", "functionals": [[1, 0], [0, 1]]}
///   {"type": "gauge2d", "symmetric": true, "pieces": [...]}
///   {"type": "builtin", "name": "stadium"}
/// with optional "name" and "basis": [[...], ...]. Gauge pieces:
///   {"kind": "implicit", "equation": "superellipse", "params": [4], "x_range": [a, b], "branch": 1}
///   {"kind": "circular", "radius": r, "angle_range": [a, b]}
///   {"kind": "segment", "from": [x, y], "to": [x, y]}
///   {"kind": "flat", "y": c, "x_range": [a, b]}
/// Unknown fields are rejected. Gauges must pass validate_gauge_convexity.
/// Throws InvalidSpace (or MalformedBoundary for unusable boundaries).
SpaceDefinition load_space_json(const nlohmann::json& doc);

SpaceDefinition load_space_file(const std::filesystem::path& path);

/// "l2", "linf", "lp:3", "lp:3,dim=3", "builtin:stadium", or a path to a
/// JSON file.
SpaceDefinition parse_space_spec(std::string_view spec);

Gauge2DBoundary parse_boundary(const nlohmann::json& pieces, bool symmetric);

}  // namespace mgeo

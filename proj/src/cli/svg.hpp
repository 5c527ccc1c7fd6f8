#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mgeo/space.hpp"

namespace mgeo::cli {

struct SvgOverlays {
  std::vector<std::pair<Vector, Vector>> diameters;  // conjugate pairs (x, y)
  std::vector<std::pair<Vector, Vector>> flats;      // flat segment [u, v]
  std::vector<std::pair<Vector, Vector>> arrows;     // x -> companion y
};

/// Unit sphere as a closed polyline of `samples` points, viewBox [-1.6, 1.6]²,
/// y axis pointing up, coordinates at 6 decimals.
std::string sphere_svg(const NormedSpace& space, const SvgOverlays& overlays, std::size_t samples = 2048);

}  // namespace mgeo::cli

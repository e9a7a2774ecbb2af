#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "udgroute/predicates.hpp"

namespace udgroute {

struct Triangulation {
  /// Counter-clockwise triangles over input indices.
  std::vector<std::array<std::uint32_t, 3>> triangles;
  /// Undirected edges (i < j), sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

/// Delaunay triangulation by incremental Bowyer-Watson insertion inside a far
/// bounding triangle, using exact predicates. Cocircular points are never
/// treated as "inside", which resolves ties consistently. Collinear inputs
/// yield no triangles but still the chain of consecutive edges.
/// Throws DegenerateInput on coincident points.
Triangulation delaunay(std::span<const Point> points);

}  // namespace udgroute

#pragma once

#include <iosfwd>
#include <vector>

#include "udgroute/geometry.hpp"

namespace udgroute {

/// Planar spanner of a unit disk graph: the Delaunay edges of length <= 1.
struct PlanarSpanner {
  std::vector<Edge> edges;  // u < v, sorted
  WeightedGraph graph;
  double stretch = 1.0;     // max d_H / d_G over all pairs

  double diameter() const { return udgroute::diameter(graph); }
};

inline constexpr double kSpannerStretchBound = 4.0;

/// Unit-restricted Delaunay edges of the given vertices (global ids), without
/// any verification. Shared with the decomposition's separator search.
std::vector<Edge> unit_delaunay_edges(const UnitDiskGraph& g, const std::vector<VertexId>& vertices);

/// Builds the spanner and verifies connectivity and the stretch bound on all
/// pairs. Throws SpannerPropertyViolated when either fails.
PlanarSpanner build_spanner(const UnitDiskGraph& g);

/// Exhaustive straight-line crossing test over all edge pairs.
bool is_plane_drawing(const UnitDiskGraph& g, const std::vector<Edge>& edges);

/// Debug dump: one "u v w" line per edge.
void write_spanner(std::ostream& out, const PlanarSpanner& h);

}  // namespace udgroute

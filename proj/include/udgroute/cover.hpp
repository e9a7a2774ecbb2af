#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "udgroute/geometry.hpp"

namespace udgroute {

/// Sparse r-cover of a weighted graph built from a greedy r-net: one cluster
/// per net center (its closed 2r-ball), and each vertex's home is the cluster
/// of the first center within distance r.
struct SparseCover {
  double radius = 0.0;
  std::vector<VertexId> centers;
  std::vector<std::vector<VertexId>> clusters;  // sorted members
  std::vector<std::uint32_t> home;              // cluster index per vertex
  std::size_t overlap = 0;                      // max clusters sharing a vertex

  /// Clusters containing v, ascending.
  std::vector<std::uint32_t> clusters_of(VertexId v) const;
};

inline constexpr double kCoverDiameterFactor = 4.0;
inline constexpr std::size_t kOverlapWarning = 32;

/// Throws InvalidInput when r <= 0.
SparseCover build_cover(const WeightedGraph& h, double r);

/// max_i diam(H_i) / r, with diameters measured inside each induced cluster.
double cover_diameter_ratio(const WeightedGraph& h, const SparseCover& cover);

/// Debug dump: "cluster,vertex" rows.
void write_cover_csv(std::ostream& out, const SparseCover& cover);

}  // namespace udgroute

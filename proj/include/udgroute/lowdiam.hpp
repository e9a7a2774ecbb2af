#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "udgroute/bits.hpp"
#include "udgroute/geometry.hpp"

namespace udgroute {

/// Grid clustering of a (sub)graph: R holds one representative per occupied
/// cell of side eps/sqrt(2), Z adds one bridging edge per pair of cells joined
/// by a graph edge.
struct ClusterSets {
  double epsilon = 0.0;
  std::vector<VertexId> cluster;  // R, sorted
  std::vector<VertexId> skeleton; // Z, sorted, contains R
  std::vector<VertexId> rep;      // rep[v] for members, kNoVertex elsewhere

  bool is_cluster(VertexId v) const;
};

/// Throws InvalidEpsilon unless 0 < eps <= 1.
ClusterSets build_rz(const UnitDiskGraph& g, const Region& region, double eps);
inline ClusterSets build_rz(const UnitDiskGraph& g, double eps) { return build_rz(g, Region::whole(g.size()), eps); }

/// Shortest-path tree of DG(Z) rooted at a cluster vertex, as (child, parent)
/// pairs sorted by child.
struct ClusterTree {
  VertexId root = kNoVertex;
  std::vector<std::pair<VertexId, VertexId>> edges;

  bool contains(VertexId v) const;
  /// Parent of v; v must be a non-root member.
  VertexId parent_of(VertexId v) const;

  friend bool operator==(const ClusterTree&, const ClusterTree&) = default;
};

/// A cluster vertex stores its own tree; any other vertex stores its
/// representative's full label, i.e. the representative's tree.
struct LowDiamLabel {
  VertexId self = kNoVertex;
  bool is_cluster = false;
  ClusterTree tree;  // rooted at self when is_cluster, else at rep(self)

  VertexId cluster_vertex() const { return tree.root; }

  friend bool operator==(const LowDiamLabel&, const LowDiamLabel&) = default;
};

/// Low-diameter scheme on the subgraph induced by a region; labels indexed by
/// global id (empty optional outside the region).
class LowDiamScheme {
 public:
  LowDiamScheme(const UnitDiskGraph& g, const Region& region, double eps);
  LowDiamScheme(const UnitDiskGraph& g, double eps) : LowDiamScheme(g, Region::whole(g.size()), eps) {}

  const ClusterSets& sets() const { return sets_; }
  const LowDiamLabel& label(VertexId v) const { return *labels_[v]; }
  bool has_label(VertexId v) const { return labels_[v].has_value(); }
  double epsilon() const { return sets_.epsilon; }

 private:
  ClusterSets sets_;
  std::vector<std::optional<LowDiamLabel>> labels_;
};

/// Routing function: direct hop if adjacent, else along the target cluster's
/// tree when the current vertex lies on it, else to the own representative.
/// Throws NotANeighbor when the chosen next vertex is not adjacent.
Port sigma_diam(const LowDiamLabel& s, const LowDiamLabel& t, const Broadcast& beta);

/// Next vertex chosen by sigma_diam (before port lookup).
VertexId lowdiam_next_vertex(const LowDiamLabel& s, const LowDiamLabel& t, const Broadcast& beta);

void encode(BitWriter& out, const LowDiamLabel& label, const BitLayout& layout);
LowDiamLabel decode_lowdiam_label(BitReader& in, const BitLayout& layout);
std::size_t encoded_bits(const LowDiamLabel& label, const BitLayout& layout);

}  // namespace udgroute

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "udgroute/geometry.hpp"

namespace udgroute {

/// Shortest-path tree of a node's region rooted at one of its portals.
struct PortalTree {
  VertexId portal = kNoVertex;
  std::vector<double> dist;      // aligned with DecompNode::vertices
  std::vector<VertexId> parent;  // global ids; kNoVertex at the portal
};

enum class SplitKind : std::uint8_t { kLeaf, kCycle, kMedian };

struct DecompNode {
  std::uint32_t id = 0;
  std::uint32_t depth = 0;
  std::uint32_t parent = kNoVertex;
  SplitKind split = SplitKind::kLeaf;
  std::vector<VertexId> vertices;  // V(mu), sorted
  std::vector<VertexId> portals;   // port(mu), sorted
  std::vector<std::uint32_t> children;
  std::vector<PortalTree> trees;   // aligned with portals
  std::size_t separator_size = 0;  // |S+| for inner nodes

  /// Position of v in vertices, or kNoVertex.
  std::uint32_t local(VertexId v) const;
  bool contains(VertexId v) const { return local(v) != kNoVertex; }
};

/// Hierarchy of connected regions with portals whose shortest-path trees give
/// the additive distance estimate theta.
class DecompositionTree {
 public:
  const std::vector<DecompNode>& nodes() const { return nodes_; }
  const DecompNode& node(std::uint32_t id) const { return nodes_[id]; }
  const DecompNode& root() const { return nodes_.front(); }

  /// Node whose portal set contains v.
  std::uint32_t owner(VertexId v) const { return owner_[v]; }
  /// Nodes whose region contains v, root first, ending at owner(v).
  std::vector<std::uint32_t> chain(VertexId v) const;

  std::size_t height() const { return height_; }
  std::size_t max_portals() const { return max_portals_; }
  std::size_t cycle_splits() const { return cycle_splits_; }
  std::size_t median_splits() const { return median_splits_; }
  double epsilon() const { return epsilon_; }
  double diameter() const { return diameter_; }
  double spacing() const { return epsilon_ * diameter_; }
  std::size_t region_size() const { return root().vertices.size(); }

 private:
  friend class DecompositionBuilder;
  std::vector<DecompNode> nodes_;
  std::vector<std::uint32_t> owner_;
  std::size_t height_ = 0;
  std::size_t max_portals_ = 0;
  std::size_t cycle_splits_ = 0;
  std::size_t median_splits_ = 0;
  double epsilon_ = 0.0;
  double diameter_ = 0.0;
};

/// Leaf size bound max(2, ceil(1/eps)).
std::size_t leaf_threshold(double eps);

/// Decomposes the subgraph induced by `region`; `diam` is that subgraph's
/// diameter. Throws EpsilonTooSmall unless eps * diam > 1, DepthLimitExceeded
/// when the height passes 4 log2 n + 8.
DecompositionTree build_decomposition(const UnitDiskGraph& g, const Region& region, double eps, double diam);
DecompositionTree build_decomposition(const UnitDiskGraph& g, double eps, double diam);

/// min over portals p whose region holds s and t of d(s,p) + d(p,t).
double oracle_theta(const DecompositionTree& tree, VertexId s, VertexId t);

/// Structural invariants (disjointness, coverage, connectivity, leaf rule,
/// unique portal ownership). Returns one message per violation.
std::vector<std::string> check_structure(const DecompositionTree& tree, const UnitDiskGraph& g);

/// Debug dump: indented "node <id> |V|=<n> portals=<ids>" lines.
void write_decomposition(std::ostream& out, const DecompositionTree& tree);

}  // namespace udgroute

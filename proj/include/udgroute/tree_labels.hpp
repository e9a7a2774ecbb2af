#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "udgroute/bits.hpp"
#include "udgroute/geometry.hpp"

namespace udgroute {

/// A rooted tree over a subset of host-graph vertices (global ids).
class RootedTree {
 public:
  /// `vertices` is any listing of the tree's vertex set; `parent[i]` is the
  /// parent id of vertices[i] (kNoVertex for the root).
  RootedTree(std::vector<VertexId> vertices, const std::vector<VertexId>& parent_of_vertex);

  /// Tree from a shortest-path parent array over a host graph.
  static RootedTree from_shortest_paths(const ShortestPaths& sp, const std::vector<VertexId>& vertices);

  VertexId root() const { return vertices_[root_]; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  /// Index of `v` in vertices(), or kNoVertex.
  std::uint32_t index_of(VertexId v) const;
  std::uint32_t parent_index(std::uint32_t i) const { return parent_[i]; }
  /// Children of vertex index i, sorted by id.
  const std::vector<std::uint32_t>& children(std::uint32_t i) const { return children_[i]; }

 private:
  std::vector<VertexId> vertices_;  // sorted by id
  std::vector<std::uint32_t> parent_;
  std::vector<std::vector<std::uint32_t>> children_;
  std::uint32_t root_ = 0;
};

struct TreeLabel {
  VertexId self = kNoVertex;
  std::uint32_t low = 0;   // smallest postorder number in the subtree
  std::uint32_t post = 0;  // own postorder number
  std::optional<VertexId> parent;
  std::optional<VertexId> heavy_child;
  /// (ancestor, child) for every light edge on the root-to-self path, top down.
  std::vector<std::pair<VertexId, VertexId>> exits;

  bool in_subtree_of(const TreeLabel& ancestor) const { return ancestor.low <= post && post <= ancestor.post; }

  friend bool operator==(const TreeLabel&, const TreeLabel&) = default;
};

/// Heavy-path labels: heavy child = largest subtree (ties to smaller id),
/// postorder visits children by increasing id. Result is aligned with
/// tree.vertices().
std::vector<TreeLabel> build_tree_labels(const RootedTree& tree);

/// Neighbor of s on the s-t tree path. Throws IncompatibleLabels if s == t.
VertexId tree_next_hop(const TreeLabel& s, const TreeLabel& t);

void encode(BitWriter& out, const TreeLabel& label, const BitLayout& layout);
TreeLabel decode_tree_label(BitReader& in, const BitLayout& layout);

}  // namespace udgroute

#include "udgroute/lowdiam.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "udgroute/errors.hpp"

namespace udgroute {

namespace {

using Cell = std::pair<std::int64_t, std::int64_t>;

}  // namespace

bool ClusterSets::is_cluster(VertexId v) const { return std::binary_search(cluster.begin(), cluster.end(), v); }

ClusterSets build_rz(const UnitDiskGraph& g, const Region& region, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorKind::kInvalidEpsilon, "clustering needs 0 < eps <= 1");
  ClusterSets sets;
  sets.epsilon = eps;
  sets.rep.assign(g.size(), kNoVertex);

  // Shrink the side by a hair so rounding in floor() cannot push two
  // same-cell sites farther apart than eps.
  const double side = eps / std::sqrt(2.0) * (1.0 - 1e-12);
  auto cell_of = [&](VertexId v) {
    const Site& s = g.site(v);
    return Cell{static_cast<std::int64_t>(std::floor(s.x / side)), static_cast<std::int64_t>(std::floor(s.y / side))};
  };

  std::map<Cell, VertexId> representative;
  for (VertexId v : region.vertices()) {  // ascending ids: first seen is lowest
    representative.try_emplace(cell_of(v), v);
  }
  for (VertexId v : region.vertices()) sets.rep[v] = representative.at(cell_of(v));

  std::map<std::pair<Cell, Cell>, std::pair<VertexId, VertexId>> bridge;
  for (VertexId u : region.vertices()) {
    const Cell cu = cell_of(u);
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.id <= u || !region.contains(nb.id)) continue;
      const Cell cv = cell_of(nb.id);
      if (cu == cv) continue;
      const auto key = cu < cv ? std::pair{cu, cv} : std::pair{cv, cu};
      const std::pair<VertexId, VertexId> candidate{u, nb.id};
      auto [it, inserted] = bridge.try_emplace(key, candidate);
      if (!inserted && candidate < it->second) it->second = candidate;
    }
  }

  for (const auto& [cell, v] : representative) sets.cluster.push_back(v);
  sets.skeleton = sets.cluster;
  for (const auto& [key, e] : bridge) {
    sets.skeleton.push_back(e.first);
    sets.skeleton.push_back(e.second);
  }
  for (auto* list : {&sets.cluster, &sets.skeleton}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  return sets;
}

bool ClusterTree::contains(VertexId v) const {
  if (v == root) return true;
  const auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{v, VertexId{0}});
  return it != edges.end() && it->first == v;
}

VertexId ClusterTree::parent_of(VertexId v) const {
  const auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{v, VertexId{0}});
  if (it == edges.end() || it->first != v) throw Error(ErrorKind::kIncompatibleLabels, "vertex not in cluster tree");
  return it->second;
}

LowDiamScheme::LowDiamScheme(const UnitDiskGraph& g, const Region& region, double eps)
    : sets_(build_rz(g, region, eps)), labels_(g.size()) {
  const Region skeleton(g.size(), sets_.skeleton);
  std::vector<ClusterTree> trees(g.size());
  for (VertexId z : sets_.cluster) {
    const ShortestPaths sp = dijkstra(g.topology(), z, &skeleton);
    ClusterTree& tree = trees[z];
    tree.root = z;
    for (VertexId v : sets_.skeleton) {
      if (v == z) continue;
      if (sp.parent[v] == kNoVertex) {
        throw Error(ErrorKind::kAssertionViolation, "skeleton graph DG(Z) is disconnected");
      }
      tree.edges.emplace_back(v, sp.parent[v]);
    }
  }
  for (VertexId v : region.vertices()) {
    const VertexId r = sets_.rep[v];
    labels_[v] = LowDiamLabel{v, r == v, trees[r]};
  }
}

VertexId lowdiam_next_vertex(const LowDiamLabel& s, const LowDiamLabel& t, const Broadcast& beta) {
  if (beta(t.self) != beta.sentinel()) return t.self;
  if (s.self != t.tree.root && t.tree.contains(s.self)) return t.tree.parent_of(s.self);
  if (!s.is_cluster) return s.tree.root;
  throw Error(ErrorKind::kNotANeighbor,
              "vertex " + std::to_string(s.self) + " is a cluster vertex outside the target's tree");
}

Port sigma_diam(const LowDiamLabel& s, const LowDiamLabel& t, const Broadcast& beta) {
  const VertexId next = lowdiam_next_vertex(s, t, beta);
  const Port p = beta(next);
  if (p == beta.sentinel()) {
    throw Error(ErrorKind::kNotANeighbor,
                "next vertex " + std::to_string(next) + " is not adjacent to " + std::to_string(s.self));
  }
  return p;
}

namespace {

void encode_cluster(BitWriter& out, VertexId self, const ClusterTree& tree, const BitLayout& layout) {
  out.write_bit(true);
  out.write(self, layout.id);
  out.write(tree.edges.size(), layout.count);
  for (const auto& [child, parent] : tree.edges) {
    out.write(child, layout.id);
    out.write(parent, layout.id);
  }
}

}  // namespace

void encode(BitWriter& out, const LowDiamLabel& label, const BitLayout& layout) {
  if (label.is_cluster) {
    encode_cluster(out, label.self, label.tree, layout);
    return;
  }
  out.write_bit(false);
  out.write(label.self, layout.id);
  encode_cluster(out, label.tree.root, label.tree, layout);
}

LowDiamLabel decode_lowdiam_label(BitReader& in, const BitLayout& layout) {
  LowDiamLabel lab;
  lab.is_cluster = in.read_bit();
  lab.self = static_cast<VertexId>(in.read(layout.id));
  if (!lab.is_cluster && !in.read_bit()) {
    throw Error(ErrorKind::kMalformedData, "embedded representative label must be a cluster label");
  }
  lab.tree.root = lab.is_cluster ? lab.self : static_cast<VertexId>(in.read(layout.id));
  const auto count = in.read(layout.count);
  lab.tree.edges.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto child = static_cast<VertexId>(in.read(layout.id));
    const auto parent = static_cast<VertexId>(in.read(layout.id));
    lab.tree.edges.emplace_back(child, parent);
  }
  return lab;
}

std::size_t encoded_bits(const LowDiamLabel& label, const BitLayout& layout) {
  const std::size_t cluster_bits = 1 + layout.id + layout.count + 2 * layout.id * label.tree.edges.size();
  return label.is_cluster ? cluster_bits : 1 + layout.id + cluster_bits;
}

}  // namespace udgroute

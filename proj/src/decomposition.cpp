#include "udgroute/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>
#include <ostream>

#include "udgroute/delaunay.hpp"
#include "udgroute/errors.hpp"
#include "udgroute/predicates.hpp"

namespace udgroute {

std::uint32_t DecompNode::local(VertexId v) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return kNoVertex;
  return static_cast<std::uint32_t>(it - vertices.begin());
}

std::vector<std::uint32_t> DecompositionTree::chain(VertexId v) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t id = owner_[v]; id != kNoVertex; id = nodes_[id].parent) out.push_back(id);
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t leaf_threshold(double eps) {
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(1.0 / eps)));
}

namespace {

struct Separator {
  SplitKind kind = SplitKind::kMedian;
  std::vector<VertexId> strip;         // S+
  std::vector<VertexId> base_portals;  // sampled separator paths
};

enum Side : std::uint8_t { kOnCycle, kInside, kOutside };

bool strictly_inside(const std::vector<Point>& polygon, Point q) {
  bool inside = false;
  for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
    const Point& a = polygon[j];
    const Point& b = polygon[i];
    if ((a.y > q.y) == (b.y > q.y)) continue;
    const Point& lo = a.y < b.y ? a : b;
    const Point& hi = a.y < b.y ? b : a;
    if (orient2d(lo, hi, q) > 0) inside = !inside;
  }
  return inside;
}

/// Vertices of `path` kept as portals: both ends, plus every vertex after
/// which the next one would be more than `spacing` past the last portal.
void sample_path(const std::vector<VertexId>& path, const std::vector<double>& cumulative, double spacing,
                 std::vector<VertexId>& out) {
  out.push_back(path.front());
  std::size_t last = 0;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (cumulative[path[i + 1]] - cumulative[path[last]] > spacing) {
      out.push_back(path[i]);
      last = i;
    }
  }
  out.push_back(path.back());
}

std::vector<VertexId> marked(const Region& region, const std::vector<char>& flag) {
  std::vector<VertexId> out;
  for (VertexId v : region.vertices()) {
    if (flag[region.local(v)]) out.push_back(v);
  }
  return out;
}

/// Balanced fundamental-cycle separator of the region's restricted Delaunay
/// graph; empty when none is found or the strip fails to separate.
std::optional<Separator> cycle_separator(const UnitDiskGraph& g, const Region& region, double spacing) {
  const auto& verts = region.vertices();
  const std::size_t m = verts.size();
  std::vector<Point> pts;
  pts.reserve(m);
  for (VertexId v : verts) pts.push_back(point_of(g.site(v)));
  const Triangulation tri = delaunay(pts);

  std::vector<Edge> real;
  for (const auto& [i, j] : tri.edges) {
    if (within_unit(g.site(verts[i]), g.site(verts[j]))) {
      real.push_back({verts[i], verts[j], distance(g.site(verts[i]), g.site(verts[j]))});
    }
  }
  const WeightedGraph h = WeightedGraph::from_edges(g.size(), real);
  if (!is_connected(h, region)) return std::nullopt;

  const ShortestPaths spt = dijkstra(h, verts.front(), &region);
  std::vector<std::uint32_t> hops(m, 0);
  {
    std::vector<VertexId> by_dist = verts;
    std::sort(by_dist.begin(), by_dist.end(),
              [&](VertexId a, VertexId b) { return std::pair{spt.dist[a], a} < std::pair{spt.dist[b], b}; });
    for (VertexId v : by_dist) {
      if (spt.parent[v] != kNoVertex) hops[region.local(v)] = hops[region.local(spt.parent[v])] + 1;
    }
  }

  struct Candidate {
    bool is_virtual;
    double length;
    VertexId a, b;
  };
  std::vector<Candidate> candidates;
  for (const auto& [i, j] : tri.edges) {
    const VertexId a = verts[i], b = verts[j];
    if (spt.parent[a] == b || spt.parent[b] == a) continue;
    candidates.push_back({!within_unit(g.site(a), g.site(b)), distance(g.site(a), g.site(b)), a, b});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.is_virtual, x.length, x.a, x.b) < std::tie(y.is_virtual, y.length, y.a, y.b);
  });

  // Cycle a -> ... -> lca -> ... -> b, closed by the candidate edge.
  auto fundamental_cycle = [&](VertexId a, VertexId b, std::vector<VertexId>& up_a, std::vector<VertexId>& up_b) {
    up_a.assign(1, a);
    up_b.assign(1, b);
    while (hops[region.local(up_a.back())] > hops[region.local(up_b.back())]) up_a.push_back(spt.parent[up_a.back()]);
    while (hops[region.local(up_b.back())] > hops[region.local(up_a.back())]) up_b.push_back(spt.parent[up_b.back()]);
    while (up_a.back() != up_b.back()) {
      up_a.push_back(spt.parent[up_a.back()]);
      up_b.push_back(spt.parent[up_b.back()]);
    }
  };

  const double limit = 2.0 * static_cast<double>(m) / 3.0;
  std::vector<VertexId> up_a, up_b;
  std::vector<char> on_cycle(m, 0);
  std::vector<Point> polygon;
  std::optional<Candidate> chosen;
  for (const Candidate& c : candidates) {
    fundamental_cycle(c.a, c.b, up_a, up_b);
    polygon.clear();
    for (VertexId v : up_a) polygon.push_back(point_of(g.site(v)));
    for (std::size_t k = up_b.size() - 1; k-- > 0;) polygon.push_back(point_of(g.site(up_b[k])));
    const std::size_t cycle_len = polygon.size();
    if (cycle_len < 3) continue;

    double minx = polygon[0].x, maxx = minx, miny = polygon[0].y, maxy = miny;
    for (const Point& p : polygon) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
    for (VertexId v : up_a) on_cycle[region.local(v)] = 1;
    for (VertexId v : up_b) on_cycle[region.local(v)] = 1;
    std::size_t in_box = 0, inside = 0;
    std::vector<std::size_t> box;
    for (std::size_t k = 0; k < m; ++k) {
      if (on_cycle[k]) continue;
      const Point& p = pts[k];
      if (p.x < minx || p.x > maxx || p.y < miny || p.y > maxy) continue;
      ++in_box;
      box.push_back(k);
    }
    // Anything outside the bounding box is outside the cycle.
    if (static_cast<double>(m - cycle_len - in_box) <= limit) {
      for (std::size_t k : box) {
        if (strictly_inside(polygon, pts[k])) ++inside;
      }
    }
    for (VertexId v : up_a) on_cycle[region.local(v)] = 0;
    for (VertexId v : up_b) on_cycle[region.local(v)] = 0;
    if (static_cast<double>(m - cycle_len - in_box) > limit) continue;
    const std::size_t outside = m - cycle_len - inside;
    if (static_cast<double>(inside) <= limit && static_cast<double>(outside) <= limit) {
      chosen = c;
      break;
    }
  }
  if (!chosen) return std::nullopt;

  fundamental_cycle(chosen->a, chosen->b, up_a, up_b);
  polygon.clear();
  for (VertexId v : up_a) polygon.push_back(point_of(g.site(v)));
  for (std::size_t k = up_b.size() - 1; k-- > 0;) polygon.push_back(point_of(g.site(up_b[k])));

  std::vector<Side> side(m, kOutside);
  for (VertexId v : up_a) side[region.local(v)] = kOnCycle;
  for (VertexId v : up_b) side[region.local(v)] = kOnCycle;
  for (std::size_t k = 0; k < m; ++k) {
    if (side[k] != kOnCycle && strictly_inside(polygon, pts[k])) side[k] = kInside;
  }

  std::vector<char> near_cycle(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    if (side[k] == kOnCycle) {
      near_cycle[k] = 1;
      continue;
    }
    for (const Neighbor& nb : g.neighbors(verts[k])) {
      if (region.contains(nb.id) && side[region.local(nb.id)] == kOnCycle) {
        near_cycle[k] = 1;
        break;
      }
    }
  }

  // S+: the cycle, plus one endpoint of every edge jumping from inside to
  // outside (the one next to the cycle when there is such an endpoint).
  std::vector<char> strip(m, 0);
  for (std::size_t k = 0; k < m; ++k) strip[k] = side[k] == kOnCycle;
  for (std::size_t k = 0; k < m; ++k) {
    if (side[k] != kInside) continue;
    for (const Neighbor& nb : g.neighbors(verts[k])) {
      if (!region.contains(nb.id)) continue;
      const std::uint32_t w = region.local(nb.id);
      if (side[w] != kOutside) continue;
      if (near_cycle[k] || !near_cycle[w]) {
        strip[k] = 1;
      } else {
        strip[w] = 1;
      }
    }
  }

  auto separates = [&]() {
    std::vector<VertexId> rest;
    for (std::size_t k = 0; k < m; ++k) {
      if (!strip[k]) rest.push_back(verts[k]);
    }
    for (const auto& comp : components(g.topology(), Region(g.size(), rest))) {
      const Side first = side[region.local(comp.front())];
      for (VertexId v : comp) {
        if (side[region.local(v)] != first) return false;
      }
    }
    return true;
  };
  bool ok = separates();
  for (int grow = 0; grow < 2 && !ok; ++grow) {
    std::vector<char> next = strip;
    for (std::size_t k = 0; k < m; ++k) {
      if (!strip[k]) continue;
      for (const Neighbor& nb : g.neighbors(verts[k])) {
        if (region.contains(nb.id)) next[region.local(nb.id)] = 1;
      }
    }
    strip.swap(next);
    ok = separates();
  }
  if (!ok) return std::nullopt;

  Separator sep;
  sep.kind = SplitKind::kCycle;
  sep.strip = marked(region, strip);
  std::vector<VertexId> path_a(up_a.rbegin(), up_a.rend());  // lca .. a
  std::vector<VertexId> path_b(up_b.rbegin(), up_b.rend());  // lca .. b
  sample_path(path_a, spt.dist, spacing, sep.base_portals);
  sample_path(path_b, spt.dist, spacing, sep.base_portals);
  std::sort(sep.base_portals.begin(), sep.base_portals.end());
  sep.base_portals.erase(std::unique(sep.base_portals.begin(), sep.base_portals.end()), sep.base_portals.end());
  return sep;
}

/// Cut at the median coordinate along the longer side of the bounding box;
/// S+ is every endpoint of an edge crossing the cut.
Separator median_separator(const UnitDiskGraph& g, const Region& region) {
  const auto& verts = region.vertices();
  const std::size_t m = verts.size();
  double minx = kInfinity, maxx = -kInfinity, miny = kInfinity, maxy = -kInfinity;
  for (VertexId v : verts) {
    minx = std::min(minx, g.site(v).x);
    maxx = std::max(maxx, g.site(v).x);
    miny = std::min(miny, g.site(v).y);
    maxy = std::max(maxy, g.site(v).y);
  }
  Separator sep;
  sep.kind = SplitKind::kMedian;
  std::vector<char> strip(m, 0);
  const bool x_first = maxx - minx >= maxy - miny;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const bool use_x = (attempt == 0) == x_first;
    auto coord = [&](VertexId v) { return use_x ? g.site(v).x : g.site(v).y; };
    std::vector<double> values;
    for (VertexId v : verts) values.push_back(coord(v));
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>((m - 1) / 2), values.end());
    const double cut = values[(m - 1) / 2];
    bool any = false;
    for (VertexId u : verts) {
      if (coord(u) > cut) continue;
      for (const Neighbor& nb : g.neighbors(u)) {
        if (region.contains(nb.id) && coord(nb.id) > cut) {
          strip[region.local(u)] = 1;
          strip[region.local(nb.id)] = 1;
          any = true;
        }
      }
    }
    if (any) break;
  }
  sep.strip = marked(region, strip);
  if (sep.strip.empty()) sep.strip.push_back(verts.front());
  return sep;
}

}  // namespace

class DecompositionBuilder {
 public:
  DecompositionBuilder(const UnitDiskGraph& g, double eps, double diam, std::size_t n)
      : g_(g), leaf_size_(leaf_threshold(eps)),
        depth_limit_(static_cast<std::size_t>(4.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 2))) + 8.0)) {
    tree_.epsilon_ = eps;
    tree_.diameter_ = diam;
    tree_.owner_.assign(g.size(), kNoVertex);
  }

  std::uint32_t build(std::vector<VertexId> vertices, std::uint32_t depth, std::uint32_t parent) {
    if (depth > depth_limit_) {
      throw Error(ErrorKind::kDepthLimitExceeded, "decomposition deeper than " + std::to_string(depth_limit_) +
                                                      " at a region of " + std::to_string(vertices.size()) +
                                                      " vertices");
    }
    const auto id = static_cast<std::uint32_t>(tree_.nodes_.size());
    tree_.nodes_.emplace_back();
    tree_.height_ = std::max<std::size_t>(tree_.height_, depth);

    DecompNode node;
    node.id = id;
    node.depth = depth;
    node.parent = parent;
    node.vertices = std::move(vertices);
    const Region region(g_.size(), node.vertices);

    std::vector<std::vector<VertexId>> children;
    if (node.vertices.size() <= leaf_size_) {
      node.split = SplitKind::kLeaf;
      node.portals = node.vertices;
      for (VertexId p : node.portals) node.trees.push_back(portal_tree(node, region, p));
    } else {
      std::optional<Separator> sep = cycle_separator(g_, region, tree_.spacing());
      if (!sep) sep = median_separator(g_, region);
      node.split = sep->kind;
      node.separator_size = sep->strip.size();
      (sep->kind == SplitKind::kCycle ? tree_.cycle_splits_ : tree_.median_splits_)++;
      choose_portals(node, region, *sep);

      std::vector<VertexId> rest, strip_rest;
      std::vector<char> in_strip(node.vertices.size(), 0);
      for (VertexId v : sep->strip) in_strip[region.local(v)] = 1;
      for (VertexId v : node.vertices) {
        if (!in_strip[region.local(v)]) {
          rest.push_back(v);
        } else if (!std::binary_search(node.portals.begin(), node.portals.end(), v)) {
          strip_rest.push_back(v);
        }
      }
      for (auto* part : {&rest, &strip_rest}) {
        for (auto& comp : components(g_.topology(), Region(g_.size(), *part))) children.push_back(std::move(comp));
      }
      std::sort(children.begin(), children.end());
    }
    for (VertexId p : node.portals) tree_.owner_[p] = id;
    tree_.max_portals_ = std::max(tree_.max_portals_, node.portals.size());
    tree_.nodes_[id] = std::move(node);

    for (auto& child : children) {
      const std::uint32_t cid = build(std::move(child), depth + 1, id);
      tree_.nodes_[id].children.push_back(cid);
    }
    return id;
  }

  DecompositionTree take() { return std::move(tree_); }

 private:
  PortalTree portal_tree(const DecompNode& node, const Region& region, VertexId p) const {
    const ShortestPaths sp = dijkstra(g_.topology(), p, &region);
    PortalTree t;
    t.portal = p;
    t.dist.reserve(node.vertices.size());
    t.parent.reserve(node.vertices.size());
    for (VertexId v : node.vertices) {
      t.dist.push_back(sp.dist[v]);
      t.parent.push_back(sp.parent[v]);
    }
    return t;
  }

  /// Base portals from the separator, then extra ones until every strip
  /// vertex is within spacing/2 + 1 of some portal.
  void choose_portals(DecompNode& node, const Region& region, const Separator& sep) const {
    const double reach = 0.5 * tree_.spacing() + 1.0;
    std::vector<double> nearest(node.vertices.size(), kInfinity);
    auto add = [&](VertexId p) {
      node.portals.push_back(p);
      node.trees.push_back(portal_tree(node, region, p));
      const auto& d = node.trees.back().dist;
      for (std::size_t k = 0; k < nearest.size(); ++k) nearest[k] = std::min(nearest[k], d[k]);
    };
    for (VertexId p : sep.base_portals) add(p);
    for (VertexId v : sep.strip) {
      if (nearest[region.local(v)] > reach) add(v);
    }
    std::vector<std::size_t> order(node.portals.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return node.portals[a] < node.portals[b]; });
    std::vector<VertexId> portals;
    std::vector<PortalTree> trees;
    for (auto k : order) {
      portals.push_back(node.portals[k]);
      trees.push_back(std::move(node.trees[k]));
    }
    node.portals = std::move(portals);
    node.trees = std::move(trees);
  }

  const UnitDiskGraph& g_;
  std::size_t leaf_size_;
  std::size_t depth_limit_;
  DecompositionTree tree_;
};

DecompositionTree build_decomposition(const UnitDiskGraph& g, const Region& region, double eps, double diam) {
  if (!(eps > 0.0) || !(eps * diam > 1.0)) {
    throw Error(ErrorKind::kEpsilonTooSmall,
                "need eps > 1/D (eps=" + format_double(eps) + ", D=" + format_double(diam) + ")");
  }
  DecompositionBuilder builder(g, eps, diam, region.size());
  builder.build(region.vertices(), 0, kNoVertex);
  return builder.take();
}

DecompositionTree build_decomposition(const UnitDiskGraph& g, double eps, double diam) {
  return build_decomposition(g, Region::whole(g.size()), eps, diam);
}

double oracle_theta(const DecompositionTree& tree, VertexId s, VertexId t) {
  const auto cs = tree.chain(s);
  const auto ct = tree.chain(t);
  double best = kInfinity;
  for (std::size_t k = 0; k < cs.size() && k < ct.size() && cs[k] == ct[k]; ++k) {
    const DecompNode& node = tree.node(cs[k]);
    const std::uint32_t ls = node.local(s);
    const std::uint32_t lt = node.local(t);
    for (const PortalTree& pt : node.trees) best = std::min(best, pt.dist[ls] + pt.dist[lt]);
  }
  return best;
}

std::vector<std::string> check_structure(const DecompositionTree& tree, const UnitDiskGraph& g) {
  std::vector<std::string> bad;
  auto report = [&](const DecompNode& node, const std::string& what) {
    bad.push_back("node " + std::to_string(node.id) + ": " + what);
  };
  std::vector<std::size_t> portal_count(g.size(), 0);
  for (const DecompNode& node : tree.nodes()) {
    if (!std::is_sorted(node.vertices.begin(), node.vertices.end())) report(node, "vertex list not sorted");
    const Region region(g.size(), node.vertices);
    if (!is_connected(g.topology(), region)) report(node, "region is disconnected");
    for (VertexId p : node.portals) {
      ++portal_count[p];
      if (!region.contains(p)) report(node, "portal " + std::to_string(p) + " outside region");
    }
    if (node.children.empty()) {
      if (node.portals != node.vertices) report(node, "leaf with V != port");
      continue;
    }
    std::vector<std::size_t> seen(g.size(), 0);
    for (VertexId p : node.portals) ++seen[p];
    for (std::uint32_t c : node.children) {
      const DecompNode& child = tree.node(c);
      if (child.parent != node.id) report(node, "child " + std::to_string(c) + " has wrong parent");
      for (VertexId v : child.vertices) {
        ++seen[v];
        if (!region.contains(v)) report(node, "child vertex " + std::to_string(v) + " outside region");
      }
    }
    for (VertexId v : node.vertices) {
      if (seen[v] != 1) {
        report(node, "vertex " + std::to_string(v) + " covered " + std::to_string(seen[v]) + " times");
      }
    }
  }
  for (VertexId v : tree.root().vertices) {
    if (portal_count[v] != 1) bad.push_back("vertex " + std::to_string(v) + " is a portal " +
                                            std::to_string(portal_count[v]) + " times");
  }
  return bad;
}

void write_decomposition(std::ostream& out, const DecompositionTree& tree) {
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const DecompNode& node = tree.node(stack.back());
    stack.pop_back();
    out << std::string(2 * node.depth, ' ') << "node " << node.id << " |V|=" << node.vertices.size() << " portals=";
    for (std::size_t k = 0; k < node.portals.size(); ++k) out << (k ? "," : "") << node.portals[k];
    out << '\n';
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.push_back(*it);
  }
}

}  // namespace udgroute

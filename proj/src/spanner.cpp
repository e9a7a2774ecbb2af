#include "udgroute/spanner.hpp"

#include <algorithm>
#include <ostream>

#include "udgroute/delaunay.hpp"
#include "udgroute/errors.hpp"

namespace udgroute {

std::vector<Edge> unit_delaunay_edges(const UnitDiskGraph& g, const std::vector<VertexId>& vertices) {
  std::vector<Point> pts;
  pts.reserve(vertices.size());
  for (VertexId v : vertices) pts.push_back(point_of(g.site(v)));
  const Triangulation tri = delaunay(pts);
  std::vector<Edge> edges;
  for (const auto& [i, j] : tri.edges) {
    const Site& a = g.site(vertices[i]);
    const Site& b = g.site(vertices[j]);
    if (within_unit(a, b)) {
      const VertexId u = std::min(a.id, b.id);
      const VertexId v = std::max(a.id, b.id);
      edges.push_back({u, v, distance(a, b)});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::pair{x.u, x.v} < std::pair{y.u, y.v};
  });
  return edges;
}

PlanarSpanner build_spanner(const UnitDiskGraph& g) {
  PlanarSpanner h;
  std::vector<VertexId> all(g.size());
  for (VertexId v = 0; v < g.size(); ++v) all[v] = v;
  h.edges = unit_delaunay_edges(g, all);
  h.graph = WeightedGraph::from_edges(g.size(), h.edges);
  if (!is_connected(h.graph, Region::whole(g.size()))) {
    throw Error(ErrorKind::kSpannerPropertyViolated, "restricted Delaunay graph is disconnected");
  }
  double worst = 1.0;
  for (VertexId s = 0; s < g.size(); ++s) {
    const ShortestPaths dg = dijkstra(g.topology(), s);
    const ShortestPaths dh = dijkstra(h.graph, s);
    for (VertexId t = 0; t < g.size(); ++t) {
      if (t != s) worst = std::max(worst, dh.dist[t] / dg.dist[t]);
    }
  }
  h.stretch = worst;
  if (worst > kSpannerStretchBound) {
    throw Error(ErrorKind::kSpannerPropertyViolated, "spanner stretch " + format_double(worst) + " exceeds 4");
  }
  return h;
}

bool is_plane_drawing(const UnitDiskGraph& g, const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Point a = point_of(g.site(edges[i].u)), b = point_of(g.site(edges[i].v));
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Point c = point_of(g.site(edges[j].u)), d = point_of(g.site(edges[j].v));
      if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
          std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y)) {
        continue;
      }
      if (segments_cross(a, b, c, d)) return false;
    }
  }
  return true;
}

void write_spanner(std::ostream& out, const PlanarSpanner& h) {
  for (const Edge& e : h.edges) out << e.u << ' ' << e.v << ' ' << format_double(e.weight) << '\n';
}

}  // namespace udgroute

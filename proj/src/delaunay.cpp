#include "udgroute/delaunay.hpp"

#include <algorithm>
#include <cmath>

#include "udgroute/errors.hpp"

namespace udgroute {

Triangulation delaunay(std::span<const Point> input) {
  Triangulation out;
  const auto m = static_cast<std::uint32_t>(input.size());
  if (m < 2) return out;

  double minx = input[0].x, maxx = input[0].x, miny = input[0].y, maxy = input[0].y;
  for (const Point& p : input) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double cx = 0.5 * (minx + maxx);
  const double cy = 0.5 * (miny + maxy);
  const double span = 1e5 * std::max({maxx - minx, maxy - miny, 1.0});

  std::vector<Point> pts(input.begin(), input.end());
  pts.push_back({cx - 3.0 * span, cy - 3.0 * span});
  pts.push_back({cx + 3.0 * span, cy - 3.0 * span});
  pts.push_back({cx, cy + 3.0 * span});

  using Tri = std::array<std::uint32_t, 3>;
  std::vector<Tri> tris{{m, m + 1, m + 2}};
  std::vector<Tri> keep;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cavity_edges;

  for (std::uint32_t p = 0; p < m; ++p) {
    keep.clear();
    cavity_edges.clear();
    for (const Tri& t : tris) {
      if (incircle(pts[t[0]], pts[t[1]], pts[t[2]], pts[p]) > 0) {
        for (int k = 0; k < 3; ++k) cavity_edges.emplace_back(t[k], t[(k + 1) % 3]);
      } else {
        keep.push_back(t);
      }
    }
    if (cavity_edges.empty()) {
      throw Error(ErrorKind::kDegenerateInput, "coincident sites at input index " + std::to_string(p));
    }
    // Boundary edges of the cavity are those whose twin is not in the cavity.
    std::sort(cavity_edges.begin(), cavity_edges.end());
    for (const auto& [a, b] : cavity_edges) {
      if (!std::binary_search(cavity_edges.begin(), cavity_edges.end(), std::pair{b, a})) {
        keep.push_back({a, b, p});
      }
    }
    tris.swap(keep);
  }

  for (const Tri& t : tris) {
    const bool real = t[0] < m && t[1] < m && t[2] < m;
    if (real) out.triangles.push_back(t);
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t a = t[k], b = t[(k + 1) % 3];
      if (a < m && b < m) out.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

}  // namespace udgroute

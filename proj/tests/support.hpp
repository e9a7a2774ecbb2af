#pragma once

// Oracles and fixtures shared by the unit tests and the acceptance suite.
// They are deliberately naive so they do not share code paths with the
// library under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "udgroute/errors.hpp"
#include "udgroute/generators.hpp"
#include "udgroute/geometry.hpp"
#include "udgroute/tree_labels.hpp"

namespace testing {

using namespace udgroute;

/// Kind of the library error `f` throws, if any.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline SiteSet p5_sites() { return generate(GeneratorKind::kLinePath, 5, 0).sites; }
inline UnitDiskGraph p5() { return build_udg(p5_sites()); }

inline UnitDiskGraph random_udg(std::size_t n, std::uint64_t seed,
                                GeneratorKind kind = GeneratorKind::kUniformSquare) {
  return build_udg(generate(kind, n, seed).sites);
}

/// Bellman-Ford over the pairwise-distance definition of the graph.
inline std::vector<double> bellman_ford(const SiteSet& sites, VertexId src) {
  const std::size_t n = sites.size();
  std::vector<double> d(n, kInfinity);
  d[src] = 0.0;
  for (std::size_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (d[u] == kInfinity) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const double dx = sites[u].x - sites[v].x, dy = sites[u].y - sites[v].y;
        if (u == v || dx * dx + dy * dy > 1.0) continue;
        const double nd = d[u] + std::sqrt(dx * dx + dy * dy);
        if (nd < d[v]) {
          d[v] = nd;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return d;
}

/// Random rooted tree on `n` vertices drawn from a sparse id range.
struct RandomTree {
  std::vector<VertexId> vertices;
  std::vector<VertexId> parent;  // aligned with vertices
  std::vector<double> weight;    // weight of the edge to the parent
  std::vector<std::uint32_t> index;  // position of an id in vertices

  VertexId parent_of(VertexId v) const { return parent[index[v]]; }
  double weight_above(VertexId v) const { return weight[index[v]]; }
};

inline RandomTree random_tree(std::size_t n, std::mt19937_64& rng) {
  RandomTree t;
  std::vector<VertexId> ids(4 * n);
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(i);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(n);
  t.index.assign(4 * n, kNoVertex);
  for (std::size_t i = 0; i < n; ++i) t.index[ids[i]] = static_cast<std::uint32_t>(i);
  std::uniform_real_distribution<double> w(0.05, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    t.vertices.push_back(ids[i]);
    if (i == 0) {
      t.parent.push_back(kNoVertex);
    } else {
      // Mix of shallow and path-like shapes.
      const std::size_t lo = (rng() % 3 == 0) ? i - 1 : 0;
      t.parent.push_back(ids[std::uniform_int_distribution<std::size_t>(lo, i - 1)(rng)]);
    }
    t.weight.push_back(i == 0 ? 0.0 : w(rng));
  }
  return t;
}

/// Unique s-t path in a tree by walking parent pointers up to the meeting point.
inline std::vector<VertexId> tree_path(const RandomTree& t, VertexId s, VertexId target) {
  std::vector<VertexId> up_s{s}, up_t{target};
  for (VertexId v = s; t.parent_of(v) != kNoVertex;) up_s.push_back(v = t.parent_of(v));
  for (VertexId v = target; t.parent_of(v) != kNoVertex;) up_t.push_back(v = t.parent_of(v));
  while (up_s.size() > 1 && up_t.size() > 1 && up_s[up_s.size() - 2] == up_t[up_t.size() - 2]) {
    up_s.pop_back();
    up_t.pop_back();
  }
  std::vector<VertexId> path = up_s;  // ends at the meeting vertex
  for (std::size_t i = up_t.size() - 1; i-- > 0;) path.push_back(up_t[i]);
  return path;
}

/// Length of a tree path: each edge is weighted at its lower endpoint.
inline double tree_path_length(const RandomTree& t, const std::vector<VertexId>& path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    total += t.parent_of(path[i - 1]) == path[i] ? t.weight_above(path[i - 1]) : t.weight_above(path[i]);
  }
  return total;
}

}  // namespace testing

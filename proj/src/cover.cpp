#include "udgroute/cover.hpp"

#include <algorithm>
#include <ostream>

#include "udgroute/errors.hpp"

namespace udgroute {

std::vector<std::uint32_t> SparseCover::clusters_of(VertexId v) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < clusters.size(); ++i) {
    if (std::binary_search(clusters[i].begin(), clusters[i].end(), v)) out.push_back(i);
  }
  return out;
}

SparseCover build_cover(const WeightedGraph& h, double r) {
  if (!(r > 0.0)) throw Error(ErrorKind::kInvalidInput, "cover radius must be positive");
  const std::size_t n = h.size();
  SparseCover cover;
  cover.radius = r;
  cover.home.assign(n, static_cast<std::uint32_t>(-1));

  std::vector<std::size_t> multiplicity(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (cover.home[v] != static_cast<std::uint32_t>(-1)) continue;
    // No earlier center lies within r of v, so v becomes one.
    const auto index = static_cast<std::uint32_t>(cover.centers.size());
    cover.centers.push_back(v);
    const ShortestPaths ball = dijkstra(h, v, nullptr, 2.0 * r * (1.0 + kRoundingSlack));
    std::vector<VertexId> members;
    for (VertexId w = 0; w < n; ++w) {
      if (ball.dist[w] == kInfinity) continue;
      members.push_back(w);
      ++multiplicity[w];
      if (not_above(ball.dist[w], r) && cover.home[w] == static_cast<std::uint32_t>(-1)) cover.home[w] = index;
    }
    cover.clusters.push_back(std::move(members));
  }
  cover.overlap = *std::max_element(multiplicity.begin(), multiplicity.end());
  return cover;
}

double cover_diameter_ratio(const WeightedGraph& h, const SparseCover& cover) {
  double worst = 0.0;
  for (const auto& members : cover.clusters) {
    const Region region(h.size(), members);
    worst = std::max(worst, diameter(h, &region));
  }
  return worst / cover.radius;
}

void write_cover_csv(std::ostream& out, const SparseCover& cover) {
  out << "cluster,vertex\n";
  for (std::size_t i = 0; i < cover.clusters.size(); ++i) {
    for (VertexId v : cover.clusters[i]) out << i << ',' << v << '\n';
  }
}

}  // namespace udgroute

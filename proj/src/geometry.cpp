#include "udgroute/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>

#include "udgroute/errors.hpp"

namespace udgroute {

double distance(const Site& a, const Site& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

bool within_unit(const Site& a, const Site& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy <= 1.0;
}

WeightedGraph WeightedGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  WeightedGraph g;
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adjacency_[fill[e.u]++] = {e.v, e.weight};
    g.adjacency_[fill[e.v]++] = {e.u, e.weight};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
  return g;
}

std::ptrdiff_t WeightedGraph::neighbor_index(VertexId v, VertexId w) const {
  const auto nbrs = neighbors(v);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), w,
                                   [](const Neighbor& a, VertexId id) { return a.id < id; });
  if (it == nbrs.end() || it->id != w) return -1;
  return it - nbrs.begin();
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId v = 0; v < size(); ++v) {
    for (const Neighbor& nb : neighbors(v)) {
      if (v < nb.id) out.push_back({v, nb.id, nb.weight});
    }
  }
  return out;
}

UnitDiskGraph build_udg(SiteSet sites) {
  const std::size_t n = sites.size();
  if (n < 2) throw Error(ErrorKind::kInvalidInput, "need at least two sites");
  std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && sites[i].id == sites[i - 1].id) {
      throw Error(ErrorKind::kDuplicateId, "id " + std::to_string(sites[i].id) + " appears twice");
    }
    if (!std::isfinite(sites[i].x) || !std::isfinite(sites[i].y)) {
      throw Error(ErrorKind::kInvalidInput, "non-finite coordinate at id " + std::to_string(sites[i].id));
    }
  }
  if (sites.back().id != n - 1) throw Error(ErrorKind::kInvalidInput, "ids must be exactly 0..n-1");

  // Bucket into unit cells; neighbors can only sit in the 3x3 block around a cell.
  auto cell_key = [](double x, double y) {
    const auto cx = static_cast<std::int64_t>(std::floor(x));
    const auto cy = static_cast<std::int64_t>(std::floor(y));
    return std::pair{cx, cy};
  };
  struct KeyHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
      return std::hash<std::int64_t>()(k.first * 0x9E3779B97F4A7C15LL ^ k.second);
    }
  };
  std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::vector<VertexId>, KeyHash> cells;
  for (const Site& s : sites) cells[cell_key(s.x, s.y)].push_back(s.id);

  std::vector<Edge> edges;
  for (const Site& s : sites) {
    const auto [cx, cy] = cell_key(s.x, s.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = cells.find({cx + dx, cy + dy});
        if (it == cells.end()) continue;
        for (VertexId w : it->second) {
          if (w > s.id && within_unit(s, sites[w])) edges.push_back({s.id, w, distance(s, sites[w])});
        }
      }
    }
  }

  UnitDiskGraph g;
  g.topology_ = WeightedGraph::from_edges(n, edges);
  g.sites_ = std::move(sites);
  if (!is_connected(g.topology_, Region::whole(n))) {
    throw Error(ErrorKind::kDisconnectedGraph, "unit disk graph on " + std::to_string(n) + " sites is disconnected");
  }
  return g;
}

Region::Region(std::size_t host_size, std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)), local_(host_size, kNoVertex) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) local_[vertices_[i]] = i;
}

Region Region::whole(std::size_t host_size) {
  std::vector<VertexId> all(host_size);
  for (std::size_t i = 0; i < host_size; ++i) all[i] = static_cast<VertexId>(i);
  return Region(host_size, std::move(all));
}

ShortestPaths dijkstra(const WeightedGraph& g, VertexId source, const Region* restriction, double radius) {
  const std::size_t n = g.size();
  ShortestPaths sp;
  sp.source = source;
  sp.dist.assign(n, kInfinity);
  sp.parent.assign(n, kNoVertex);
  if (restriction != nullptr && !restriction->contains(source)) return sp;

  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<bool> settled(n, false);
  sp.dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (settled[v]) continue;
    settled[v] = true;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (settled[nb.id]) continue;
      if (restriction != nullptr && !restriction->contains(nb.id)) continue;
      const double nd = d + nb.weight;
      if (nd > radius) continue;
      if (nd < sp.dist[nb.id]) {
        sp.dist[nb.id] = nd;
        sp.parent[nb.id] = v;
        heap.push({nd, nb.id});
      }
    }
  }
  return sp;
}

double DistanceMatrix::max_finite() const {
  double best = 0.0;
  for (double d : d_) {
    if (d != kInfinity) best = std::max(best, d);
  }
  return best;
}

DistanceMatrix all_pairs(const WeightedGraph& g) {
  const std::size_t n = g.size();
  DistanceMatrix m(n);
  for (VertexId s = 0; s < n; ++s) {
    const ShortestPaths sp = dijkstra(g, s);
    for (VertexId t = 0; t < n; ++t) m.at(s, t) = sp.dist[t];
  }
  return m;
}

double diameter(const WeightedGraph& g, const Region* region) {
  double best = 0.0;
  if (region == nullptr) {
    for (VertexId s = 0; s < g.size(); ++s) {
      for (double d : dijkstra(g, s).dist) best = std::max(best, d);
    }
    return best;
  }
  for (VertexId s : region->vertices()) {
    const ShortestPaths sp = dijkstra(g, s, region);
    for (VertexId t : region->vertices()) best = std::max(best, sp.dist[t]);
  }
  return best;
}

std::vector<std::vector<VertexId>> components(const WeightedGraph& g, const Region& region) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.size(), false);
  std::vector<VertexId> stack;
  for (VertexId start : region.vertices()) {
    if (seen[start]) continue;
    std::vector<VertexId> comp;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const Neighbor& nb : g.neighbors(v)) {
        if (!seen[nb.id] && region.contains(nb.id)) {
          seen[nb.id] = true;
          stack.push_back(nb.id);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const WeightedGraph& g, const Region& region) {
  return region.size() <= 1 || components(g, region).size() == 1;
}

VertexId PortMap::node(VertexId v, Port p) const {
  if (p == 0) return v;
  if (p > by_port_[v].size()) return kNoVertex;
  return by_port_[v][p - 1];
}

PortMap assign_ports(const UnitDiskGraph& g, std::uint64_t seed) {
  PortMap pm;
  pm.seed_ = seed;
  const std::size_t n = g.size();
  pm.by_port_.resize(n);
  pm.by_index_.resize(n);
  std::mt19937_64 rng(seed);
  for (VertexId v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    std::vector<std::uint32_t> order(nbrs.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    // Plain Fisher-Yates so the permutation does not depend on the standard
    // library's distribution implementations.
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    pm.by_port_[v].resize(nbrs.size());
    pm.by_index_[v].resize(nbrs.size());
    for (std::uint32_t p = 0; p < order.size(); ++p) {
      pm.by_port_[v][p] = nbrs[order[p]].id;
      pm.by_index_[v][order[p]] = p + 1;
    }
  }
  return pm;
}

Port Broadcast::operator()(VertexId target) const {
  if (target == v_) return 0;
  if (target >= g_->size()) return sentinel();
  const std::ptrdiff_t idx = g_->topology().neighbor_index(v_, target);
  if (idx < 0) return sentinel();
  return ports_->port_of_index(v_, static_cast<std::size_t>(idx));
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_sites(std::ostream& out, const SiteSet& sites) {
  out << sites.size() << '\n';
  for (const Site& s : sites) out << s.id << ' ' << format_double(s.x) << ' ' << format_double(s.y) << '\n';
}

namespace {

double parse_double(const std::string& tok) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::kMalformedData, "bad coordinate '" + tok + "'");
  }
  return v;
}

}  // namespace

SiteSet read_sites(std::istream& in) {
  std::size_t n = 0;
  if (!(in >> n)) throw Error(ErrorKind::kMalformedData, "missing site count");
  SiteSet sites;
  sites.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    long long id = 0;
    std::string xs, ys;
    if (!(in >> id >> xs >> ys) || id < 0) {
      throw Error(ErrorKind::kMalformedData, "truncated site list at line " + std::to_string(i + 2));
    }
    sites.push_back({static_cast<VertexId>(id), parse_double(xs), parse_double(ys)});
  }
  return sites;
}

void save_sites(const std::string& path, const SiteSet& sites) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInvalidInput, "cannot write " + path);
  write_sites(out, sites);
}

SiteSet load_sites(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot read " + path);
  return read_sites(in);
}

}  // namespace udgroute

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace udgroute {

using VertexId = std::uint32_t;
using Port = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Site {
  VertexId id = 0;
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Site&, const Site&) = default;
};

using SiteSet = std::vector<Site>;

/// The same path length summed in a different order can differ in the last
/// bits, so bound checks against an oracle and closed-ball tests allow this relative
/// slack.
inline constexpr double kRoundingSlack = 1e-12;
inline bool not_below(double value, double bound) { return value >= bound * (1.0 - kRoundingSlack); }
inline bool not_above(double value, double bound) { return value <= bound * (1.0 + kRoundingSlack); }

/// Euclidean distance; every edge weight in the library goes through here.
double distance(const Site& a, const Site& b);

struct Neighbor {
  VertexId id;
  double weight;
};

struct Edge {
  VertexId u;
  VertexId v;
  double weight;
};

/// Undirected weighted graph in compressed adjacency form. Neighbor lists are
/// sorted by id.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  static WeightedGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  /// Index of w in neighbors(v), or -1.
  std::ptrdiff_t neighbor_index(VertexId v, VertexId w) const;
  bool adjacent(VertexId v, VertexId w) const { return neighbor_index(v, w) >= 0; }

  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// Unit disk graph: edge iff |uv| <= 1 (closed), weight |uv|. Always connected.
class UnitDiskGraph {
 public:
  std::size_t size() const { return sites_.size(); }
  const Site& site(VertexId v) const { return sites_[v]; }
  const SiteSet& sites() const { return sites_; }
  const WeightedGraph& topology() const { return topology_; }

  std::span<const Neighbor> neighbors(VertexId v) const { return topology_.neighbors(v); }
  std::size_t degree(VertexId v) const { return topology_.degree(v); }
  bool adjacent(VertexId v, VertexId w) const { return topology_.adjacent(v, w); }
  std::size_t edge_count() const { return topology_.edge_count(); }

 private:
  friend UnitDiskGraph build_udg(SiteSet sites);
  SiteSet sites_;
  WeightedGraph topology_;
};

/// Throws DuplicateId, InvalidInput (ids not 0..n-1, non-finite coordinates,
/// fewer than two sites) or DisconnectedGraph.
UnitDiskGraph build_udg(SiteSet sites);

/// True when |ab| <= 1 under the exact squared-distance comparison used by build_udg.
bool within_unit(const Site& a, const Site& b);

/// A vertex subset of some host graph with O(1) membership lookup.
class Region {
 public:
  Region() = default;
  Region(std::size_t host_size, std::vector<VertexId> vertices);
  static Region whole(std::size_t host_size);

  std::size_t size() const { return vertices_.size(); }
  std::size_t host_size() const { return local_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  bool contains(VertexId v) const { return v < local_.size() && local_[v] != kNoVertex; }
  /// Position of v in vertices(); v must be a member.
  std::uint32_t local(VertexId v) const { return local_[v]; }

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::uint32_t> local_;
};

struct ShortestPaths {
  VertexId source = kNoVertex;
  std::vector<double> dist;      // kInfinity when unreachable
  std::vector<VertexId> parent;  // kNoVertex at the source and unreachable vertices
};

/// Exact single-source shortest paths, optionally inside the subgraph induced
/// by `restriction`. Ties settle by (distance, id), so the parent tree is
/// deterministic.
ShortestPaths dijkstra(const WeightedGraph& g, VertexId source, const Region* restriction = nullptr,
                       double radius = kInfinity);

/// Row-major n x n matrix of exact distances (the brute-force oracle).
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kInfinity) {}

  std::size_t size() const { return n_; }
  double operator()(VertexId s, VertexId t) const { return d_[static_cast<std::size_t>(s) * n_ + t]; }
  double& at(VertexId s, VertexId t) { return d_[static_cast<std::size_t>(s) * n_ + t]; }
  double max_finite() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

DistanceMatrix all_pairs(const WeightedGraph& g);

/// Exact diameter max_{u,v} d(u,v) of the graph (or of the subgraph induced by
/// `region`).
double diameter(const WeightedGraph& g, const Region* region = nullptr);
inline double diameter(const UnitDiskGraph& g) { return diameter(g.topology()); }

/// Connected components of the subgraph induced by `region`, each sorted, the
/// list ordered by smallest member.
std::vector<std::vector<VertexId>> components(const WeightedGraph& g, const Region& region);
bool is_connected(const WeightedGraph& g, const Region& region);

/// Fixed-port model. Ports 1..deg(v) are a permutation of v's neighbors; port 0
/// is v itself.
class PortMap {
 public:
  PortMap() = default;

  std::size_t size() const { return by_port_.size(); }
  /// node(v, p); kNoVertex when p > deg(v).
  VertexId node(VertexId v, Port p) const;
  /// Port of the neighbor at position `index` of the graph's sorted neighbor list.
  Port port_of_index(VertexId v, std::size_t index) const { return by_index_[v][index]; }
  std::uint64_t seed() const { return seed_; }

 private:
  friend PortMap assign_ports(const UnitDiskGraph& g, std::uint64_t seed);
  std::vector<std::vector<VertexId>> by_port_;  // by_port_[v][p - 1]
  std::vector<std::vector<Port>> by_index_;
  std::uint64_t seed_ = 0;
};

PortMap assign_ports(const UnitDiskGraph& g, std::uint64_t seed);

/// beta_v: identifier -> port at v, or the sentinel n for non-neighbors.
class Broadcast {
 public:
  Broadcast(const UnitDiskGraph& g, const PortMap& ports, VertexId v) : g_(&g), ports_(&ports), v_(v) {}

  Port operator()(VertexId target) const;
  Port sentinel() const { return static_cast<Port>(g_->size()); }
  VertexId at() const { return v_; }

 private:
  const UnitDiskGraph* g_;
  const PortMap* ports_;
  VertexId v_;
};

/// Graph plus its fixed port assignment: the environment a packet moves in.
struct Network {
  const UnitDiskGraph* graph = nullptr;
  PortMap ports;

  Network(const UnitDiskGraph& g, std::uint64_t port_seed) : graph(&g), ports(assign_ports(g, port_seed)) {}

  Broadcast broadcast(VertexId v) const { return {*graph, ports, v}; }
  VertexId node(VertexId v, Port p) const { return ports.node(v, p); }
};

/// Instance text format: "n" on the first line, then n lines "id x y" using
/// shortest round-trip decimals.
void write_sites(std::ostream& out, const SiteSet& sites);
SiteSet read_sites(std::istream& in);
void save_sites(const std::string& path, const SiteSet& sites);
SiteSet load_sites(const std::string& path);

std::string format_double(double v);

}  // namespace udgroute

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udgroute/additive.hpp"
#include "udgroute/bits.hpp"
#include "udgroute/geometry.hpp"
#include "udgroute/hierarchical.hpp"
#include "udgroute/lowdiam.hpp"

namespace udgroute {

/// A preprocessed scheme seen through its routing function. route() may only
/// consult the labels of `current` and `target` plus beta.
class Router {
 public:
  virtual ~Router() = default;
  virtual std::string_view name() const = 0;
  virtual Port route(VertexId current, VertexId target, const Broadcast& beta) const = 0;
  /// Scheme-specific invariants for one hop; a message describes a violation.
  virtual std::optional<std::string> audit_hop(VertexId, VertexId, VertexId) const { return std::nullopt; }
  virtual std::size_t label_bits(VertexId v) const = 0;
  /// |I| for the step cap; 1 for single-level schemes.
  virtual std::size_t level_count() const { return 1; }
};

class LowDiamRouter final : public Router {
 public:
  LowDiamRouter(const LowDiamScheme& scheme, std::size_t n) : scheme_(scheme), layout_(BitLayout::for_graph(n)) {}
  std::string_view name() const override { return "lowdiam"; }
  Port route(VertexId s, VertexId t, const Broadcast& beta) const override {
    return sigma_diam(scheme_.label(s), scheme_.label(t), beta);
  }
  std::size_t label_bits(VertexId v) const override { return encoded_bits(scheme_.label(v), layout_); }

 private:
  const LowDiamScheme& scheme_;
  BitLayout layout_;
};

class AdditiveRouter final : public Router {
 public:
  AdditiveRouter(const AdditiveScheme& scheme, std::size_t n) : scheme_(scheme), layout_(BitLayout::for_graph(n)) {}
  std::string_view name() const override { return "additive"; }
  Port route(VertexId s, VertexId t, const Broadcast& beta) const override {
    return sigma_add(scheme_.label(s), scheme_.label(t), beta);
  }
  std::optional<std::string> audit_hop(VertexId s, VertexId v, VertexId t) const override {
    return scheme_.audit_hop(s, v, t);
  }
  std::size_t label_bits(VertexId v) const override { return encoded_bits(scheme_.label(v), layout_); }

 private:
  const AdditiveScheme& scheme_;
  BitLayout layout_;
};

class HierarchicalRouter final : public Router {
 public:
  explicit HierarchicalRouter(const HierarchicalScheme& scheme)
      : scheme_(scheme), layout_(BitLayout::for_graph(scheme.labels().size())) {}
  std::string_view name() const override { return "hierarchical"; }
  Port route(VertexId s, VertexId t, const Broadcast& beta) const override {
    return sigma(scheme_.label(s), scheme_.label(t), beta);
  }
  std::optional<std::string> audit_hop(VertexId s, VertexId v, VertexId t) const override {
    return scheme_.audit_hop(s, v, t);
  }
  std::size_t label_bits(VertexId v) const override { return encoded_bits(scheme_.label(v), layout_); }
  std::size_t level_count() const override { return scheme_.config().level_count(); }

 private:
  const HierarchicalScheme& scheme_;
  BitLayout layout_;
};

/// Same, over labels read back from a label store.
class StoredLabelRouter final : public Router {
 public:
  explicit StoredLabelRouter(const LabelStore& store) : store_(store), layout_(BitLayout::for_graph(store.n)) {}
  std::string_view name() const override { return "hierarchical"; }
  Port route(VertexId s, VertexId t, const Broadcast& beta) const override {
    return sigma(store_.labels[s], store_.labels[t], beta);
  }
  std::size_t label_bits(VertexId v) const override { return encoded_bits(store_.labels[v], layout_); }
  std::size_t level_count() const override { return store_.config.level_count(); }

 private:
  const LabelStore& store_;
  BitLayout layout_;
};

/// 16 n |I|.
std::size_t step_cap(std::size_t n, std::size_t levels);

/// Vertex sequence s = v_0, ..., v_m = t. Throws NonTermination past `cap`
/// hops and NotANeighbor when the returned port is not a neighbor port.
std::vector<VertexId> route_path(const Router& router, const Network& net, VertexId s, VertexId t, std::size_t cap);

/// Sum of edge lengths along a vertex sequence.
double path_length(const UnitDiskGraph& g, const std::vector<VertexId>& path);

struct PairResult {
  VertexId s = 0;
  VertexId t = 0;
  double routed = 0.0;
  double shortest = 0.0;
  std::size_t hops = 0;

  double stretch() const { return routed / shortest; }
};

struct SimulationOptions {
  bool all_pairs = true;        // else `sample` random ordered pairs
  std::size_t sample = 10000;
  std::uint64_t sample_seed = 1;
  bool audit = true;            // run the scheme's per-hop invariants
  std::size_t suffix_checks = 0;  // pairs whose routes are replayed from every hop
  std::size_t keep_violations = 20;
};

struct SimulationReport {
  std::string scheme;
  std::size_t n = 0;
  bool all_pairs = true;
  std::uint64_t sample_seed = 0;
  std::size_t cap = 0;
  std::vector<PairResult> pairs;
  double max_stretch = 1.0;
  double mean_stretch = 1.0;
  double min_stretch = 1.0;
  double max_excess = 0.0;  // max of routed - shortest
  std::size_t max_hops = 0;
  std::size_t audited_hops = 0;
  std::size_t violations = 0;
  std::vector<std::string> violation_log;
  std::size_t max_label_bits = 0;
  double mean_label_bits = 0.0;
  std::size_t total_label_bits = 0;
};

/// Routes every requested pair, checking per hop the scheme invariants and,
/// per route, that the recorded length matches a recomputation. Routing
/// failures (non-termination, bad ports) are counted as violations with the
/// hop trace so far.
SimulationReport simulate(const Router& router, const Network& net, const DistanceMatrix& oracle,
                          const SimulationOptions& options = {});

/// Rerouting from every vertex of the s-t route must reproduce its suffix.
std::optional<std::string> check_suffix(const Router& router, const Network& net, VertexId s, VertexId t);

void write_pairs_csv(std::ostream& out, const SimulationReport& report);

}  // namespace udgroute

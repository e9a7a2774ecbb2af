#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "udgroute/bits.hpp"
#include "udgroute/decomposition.hpp"
#include "udgroute/geometry.hpp"
#include "udgroute/tree_labels.hpp"

namespace udgroute {

/// x -> floor(c x) with c = n / (eps D).
struct Quantizer {
  double c = 1.0;

  static Quantizer make(std::size_t n, double eps, double diam) {
    return {static_cast<double>(n) / (eps * diam)};
  }
  std::int64_t operator()(double x) const { return static_cast<std::int64_t>(std::floor(x * c)); }
};

/// One portal tree as seen from a vertex: the portal, the quantized distance
/// to it and the vertex's label in the portal's tree (whose low/post fields
/// are the postorder interval).
struct PortalEntry {
  VertexId portal = kNoVertex;
  std::int64_t dist_c = 0;
  TreeLabel tree;

  friend bool operator==(const PortalEntry&, const PortalEntry&) = default;
};

struct AdditiveLabel {
  VertexId self = kNoVertex;
  std::vector<PortalEntry> entries;  // sorted by portal

  const PortalEntry* find(VertexId portal) const;

  friend bool operator==(const AdditiveLabel&, const AdditiveLabel&) = default;
};

/// Estimate for one portal: d_c(t) - d_c(s) when t lies below s in T_p,
/// d_c(t) + d_c(s) otherwise.
std::int64_t theta_c(const PortalEntry& s, const PortalEntry& t);

struct ThetaChoice {
  std::int64_t value = 0;
  VertexId portal = kNoVertex;
  std::size_t s_index = 0;  // positions of the portal's entries in the labels
  std::size_t t_index = 0;
};

/// Lexicographic minimum of (theta_c, portal id) over common portals. Throws
/// NoCommonPortal when the labels share none.
ThetaChoice theta_c(const AdditiveLabel& s, const AdditiveLabel& t);

/// Next vertex: the tree hop toward t in the s-t portal's tree.
VertexId additive_next_vertex(const AdditiveLabel& s, const AdditiveLabel& t);
Port sigma_add(const AdditiveLabel& s, const AdditiveLabel& t, const Broadcast& beta);

/// The additive-stretch scheme on the subgraph induced by a region. `diam` is
/// that subgraph's exact diameter (computed when absent).
class AdditiveScheme {
 public:
  AdditiveScheme(const UnitDiskGraph& g, const Region& region, double eps, std::optional<double> diam = {});
  AdditiveScheme(const UnitDiskGraph& g, double eps) : AdditiveScheme(g, Region::whole(g.size()), eps) {}

  const DecompositionTree& decomposition() const { return tree_; }
  const Quantizer& quantizer() const { return quantizer_; }
  const AdditiveLabel& label(VertexId v) const { return labels_[v]; }
  bool has_label(VertexId v) const { return labels_[v].self != kNoVertex; }
  double epsilon() const { return tree_.epsilon(); }
  double diameter() const { return tree_.diameter(); }

  /// Number of edges between s and t in the tree of `portal`.
  std::size_t tree_hops(VertexId portal, VertexId s, VertexId t) const;

  /// Checks the progress invariants for the hop s -> v toward t: the portal
  /// persists, both potentials drop by at least |sv|_c, a stalled potential
  /// never raises the portal id, and (theta_c, portal, tree hops) strictly
  /// decreases. Returns a description of the first violation.
  std::optional<std::string> audit_hop(VertexId s, VertexId v, VertexId t) const;

 private:
  const UnitDiskGraph* g_;
  DecompositionTree tree_;
  Quantizer quantizer_;
  std::vector<AdditiveLabel> labels_;
};

void encode(BitWriter& out, const AdditiveLabel& label, const BitLayout& layout);
AdditiveLabel decode_additive_label(BitReader& in, const BitLayout& layout);
std::size_t encoded_bits(const AdditiveLabel& label, const BitLayout& layout);

}  // namespace udgroute

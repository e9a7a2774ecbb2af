#include "udgroute/additive.hpp"

#include <algorithm>
#include <tuple>

#include "udgroute/errors.hpp"

namespace udgroute {

const PortalEntry* AdditiveLabel::find(VertexId portal) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), portal,
                                   [](const PortalEntry& e, VertexId p) { return e.portal < p; });
  return it != entries.end() && it->portal == portal ? &*it : nullptr;
}

std::int64_t theta_c(const PortalEntry& s, const PortalEntry& t) {
  return t.tree.in_subtree_of(s.tree) ? t.dist_c - s.dist_c : t.dist_c + s.dist_c;
}

ThetaChoice theta_c(const AdditiveLabel& s, const AdditiveLabel& t) {
  std::optional<ThetaChoice> best;
  std::size_t i = 0, j = 0;
  while (i < s.entries.size() && j < t.entries.size()) {
    const VertexId ps = s.entries[i].portal, pt = t.entries[j].portal;
    if (ps < pt) {
      ++i;
    } else if (pt < ps) {
      ++j;
    } else {
      const std::int64_t value = theta_c(s.entries[i], t.entries[j]);
      // Portals arrive in increasing id order, so strict < keeps the smaller id on ties.
      if (!best || value < best->value) best = ThetaChoice{value, ps, i, j};
      ++i;
      ++j;
    }
  }
  if (!best) {
    throw Error(ErrorKind::kNoCommonPortal,
                "labels of " + std::to_string(s.self) + " and " + std::to_string(t.self) + " share no portal");
  }
  return *best;
}

VertexId additive_next_vertex(const AdditiveLabel& s, const AdditiveLabel& t) {
  const ThetaChoice choice = theta_c(s, t);
  return tree_next_hop(s.entries[choice.s_index].tree, t.entries[choice.t_index].tree);
}

Port sigma_add(const AdditiveLabel& s, const AdditiveLabel& t, const Broadcast& beta) {
  const VertexId next = additive_next_vertex(s, t);
  const Port p = beta(next);
  if (p == beta.sentinel()) {
    throw Error(ErrorKind::kNotANeighbor,
                "tree hop " + std::to_string(next) + " is not adjacent to " + std::to_string(s.self));
  }
  return p;
}

AdditiveScheme::AdditiveScheme(const UnitDiskGraph& g, const Region& region, double eps, std::optional<double> diam)
    : g_(&g),
      tree_(build_decomposition(g, region, eps, diam ? *diam : udgroute::diameter(g.topology(), &region))),
      quantizer_(Quantizer::make(region.size(), eps, tree_.diameter())),
      labels_(g.size()) {
  for (VertexId v : region.vertices()) labels_[v].self = v;
  for (const DecompNode& node : tree_.nodes()) {
    for (const PortalTree& pt : node.trees) {
      const RootedTree rooted(node.vertices, pt.parent);
      const std::vector<TreeLabel> tl = build_tree_labels(rooted);
      for (std::size_t j = 0; j < node.vertices.size(); ++j) {
        labels_[node.vertices[j]].entries.push_back({pt.portal, quantizer_(pt.dist[j]), tl[j]});
      }
    }
  }
  for (VertexId v : region.vertices()) {
    auto& entries = labels_[v].entries;
    std::sort(entries.begin(), entries.end(),
              [](const PortalEntry& a, const PortalEntry& b) { return a.portal < b.portal; });
  }
}

std::size_t AdditiveScheme::tree_hops(VertexId portal, VertexId s, VertexId t) const {
  const PortalEntry* target = labels_[t].find(portal);
  std::size_t hops = 0;
  for (VertexId x = s; x != t; ++hops) {
    const PortalEntry* here = labels_[x].find(portal);
    if (!here || !target) throw Error(ErrorKind::kIncompatibleLabels, "vertex outside the portal's tree");
    x = tree_next_hop(here->tree, target->tree);
    if (hops > labels_.size()) throw Error(ErrorKind::kNonTermination, "tree walk does not reach its target");
  }
  return hops;
}

std::optional<std::string> AdditiveScheme::audit_hop(VertexId s, VertexId v, VertexId t) const {
  const AdditiveLabel& ls = labels_[s];
  const AdditiveLabel& lv = labels_[v];
  const AdditiveLabel& lt = labels_[t];
  const ThetaChoice here = theta_c(ls, lt);
  const std::int64_t edge_c = quantizer_(distance(g_->site(s), g_->site(v)));
  const std::string hop = "hop " + std::to_string(s) + "->" + std::to_string(v) + " toward " + std::to_string(t) + ": ";

  const PortalEntry* kept = lv.find(here.portal);
  if (!kept) return hop + "portal " + std::to_string(here.portal) + " lost";
  const std::int64_t via_p0 = theta_c(*kept, lt.entries[here.t_index]);
  if (here.value < via_p0 + edge_c) {
    return hop + "theta_c through p0 dropped from " + std::to_string(here.value) + " only to " +
           std::to_string(via_p0) + " with |sv|_c=" + std::to_string(edge_c);
  }
  if (v == t) return std::nullopt;

  const ThetaChoice next = theta_c(lv, lt);
  if (here.value < next.value + edge_c) {
    return hop + "theta_c dropped from " + std::to_string(here.value) + " only to " + std::to_string(next.value);
  }
  if (next.value == here.value && next.portal > here.portal) {
    return hop + "portal id rose from " + std::to_string(here.portal) + " to " + std::to_string(next.portal) +
           " at equal theta_c";
  }
  const auto before = std::tuple{here.value, here.portal, tree_hops(here.portal, s, t)};
  const auto after = std::tuple{next.value, next.portal, tree_hops(next.portal, v, t)};
  if (!(after < before)) return hop + "progress triple did not decrease";
  return std::nullopt;
}

void encode(BitWriter& out, const AdditiveLabel& label, const BitLayout& layout) {
  out.write(label.self, layout.id);
  out.write(label.entries.size(), layout.count);
  for (const PortalEntry& e : label.entries) {
    if (e.dist_c < 0 || bits_for(static_cast<std::uint64_t>(e.dist_c)) > layout.distance) {
      throw Error(ErrorKind::kAssertionViolation, "quantized distance exceeds n^2");
    }
    out.write(e.portal, layout.id);
    out.write(static_cast<std::uint64_t>(e.dist_c), layout.distance);
    encode(out, e.tree, layout);
  }
}

AdditiveLabel decode_additive_label(BitReader& in, const BitLayout& layout) {
  AdditiveLabel lab;
  lab.self = static_cast<VertexId>(in.read(layout.id));
  const auto count = in.read(layout.count);
  for (std::uint64_t k = 0; k < count; ++k) {
    PortalEntry e;
    e.portal = static_cast<VertexId>(in.read(layout.id));
    e.dist_c = static_cast<std::int64_t>(in.read(layout.distance));
    e.tree = decode_tree_label(in, layout);
    lab.entries.push_back(std::move(e));
  }
  return lab;
}

std::size_t encoded_bits(const AdditiveLabel& label, const BitLayout& layout) {
  BitWriter w;
  encode(w, label, layout);
  return w.bit_count();
}

}  // namespace udgroute

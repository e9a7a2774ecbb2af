#include "udgroute/verify.hpp"

#include <algorithm>
#include <cmath>

#include "udgroute/additive.hpp"
#include "udgroute/errors.hpp"

namespace udgroute {

SpannerStats measure_spanner(const UnitDiskGraph& g, const PlanarSpanner& h, const DistanceMatrix& oracle) {
  SpannerStats st;
  st.edges = h.edges.size();
  for (const Edge& e : h.edges) {
    const std::ptrdiff_t k = g.topology().neighbor_index(e.u, e.v);
    if (k < 0 || g.neighbors(e.u)[static_cast<std::size_t>(k)].weight != e.weight) st.subgraph = false;
  }
  st.plane = is_plane_drawing(g, h.edges);
  st.connected = is_connected(h.graph, Region::whole(g.size()));
  const DistanceMatrix dh = all_pairs(h.graph);
  for (VertexId s = 0; s < g.size(); ++s) {
    for (VertexId t = 0; t < g.size(); ++t) {
      if (s != t) st.stretch = std::max(st.stretch, dh(s, t) / oracle(s, t));
    }
  }
  return st;
}

CoverStats measure_cover(const WeightedGraph& h, const SparseCover& cover, const DistanceMatrix& h_oracle) {
  CoverStats st;
  st.overlap = cover.overlap;
  st.clusters = cover.clusters.size();
  const std::size_t n = h.size();
  for (VertexId v = 0; v < n; ++v) {
    const auto& home = cover.clusters[cover.home[v]];
    for (VertexId w = 0; w < n; ++w) {
      if (h_oracle(v, w) <= cover.radius && !std::binary_search(home.begin(), home.end(), w)) ++st.ball_violations;
    }
  }
  for (const auto& members : cover.clusters) {
    const Region region(n, members);
    if (!is_connected(h, region)) {
      ++st.disconnected;
      continue;
    }
    st.beta = std::max(st.beta, diameter(h, &region) / cover.radius);
  }
  return st;
}

RzStats measure_rz(const UnitDiskGraph& g, const ClusterSets& sets, const DistanceMatrix& oracle) {
  RzStats st;
  const double eps = sets.epsilon;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (sets.rep[v] != kNoVertex && distance(g.site(v), g.site(sets.rep[v])) > eps) ++st.rep_violations;
  }
  const Region skeleton(g.size(), sets.skeleton);
  st.skeleton_connected = is_connected(g.topology(), skeleton);
  for (VertexId s : sets.cluster) {
    const ShortestPaths dz = dijkstra(g.topology(), s, &skeleton);
    for (VertexId t : sets.cluster) {
      if (t == s) continue;
      const double d = oracle(s, t);
      if (!not_below(dz.dist[t], d)) ++st.lower_violations;
      if (dz.dist[t] > (1.0 + 12.0 * eps) * d + 12.0 * eps) ++st.upper_violations;
      st.worst_ratio = std::max(st.worst_ratio, dz.dist[t] / d);
    }
  }
  return st;
}

ThetaStats measure_theta(const DecompositionTree& tree, const UnitDiskGraph& g, const DistanceMatrix& oracle) {
  ThetaStats st;
  st.structure_log = check_structure(tree, g);
  st.structure_violations = st.structure_log.size();
  const double budget = tree.spacing();
  for (VertexId v : tree.root().vertices) {
    for (VertexId w : tree.root().vertices) {
      if (v == w) continue;
      const double theta = oracle_theta(tree, v, w);
      const double d = oracle(v, w);
      if (!not_below(theta, d)) ++st.lower_violations;
      const double k = (theta - d) / budget;
      if (k > st.kappa_theta) {
        st.kappa_theta = k;
        st.worst_s = v;
        st.worst_t = w;
      }
    }
  }
  return st;
}

double additive_constant(const SimulationReport& report, double eps, double diam) {
  return report.max_excess / (eps * diam);
}

MeasuredConstants measure_constants(const std::vector<UnitDiskGraph>& suite, double eps) {
  MeasuredConstants m{0.0, 0.0, 0.0};
  for (const UnitDiskGraph& g : suite) {
    const DistanceMatrix oracle = all_pairs(g.topology());
    const PlanarSpanner h = build_spanner(g);
    for (double r : {1.0, 2.0, 4.0, 8.0}) m.beta = std::max(m.beta, cover_diameter_ratio(h.graph, build_cover(h.graph, r)));
    const AdditiveScheme scheme(g, eps);
    m.kappa_theta = std::max(m.kappa_theta, measure_theta(scheme.decomposition(), g, oracle).kappa_theta);
    const Network net(g, 1);
    SimulationOptions quick;
    quick.audit = false;
    const SimulationReport rep = simulate(AdditiveRouter(scheme, g.size()), net, oracle, quick);
    if (rep.violations > 0) throw Error(ErrorKind::kCalibrationFailed, "calibration run failed: " + rep.violation_log.front());
    m.kappa_a = std::max(m.kappa_a, additive_constant(rep, eps, scheme.diameter()));
  }
  // A suite that happens to route exactly still needs positive constants.
  m.beta = std::max(m.beta, 1.0);
  m.kappa_a = std::max(m.kappa_a, 1e-3);
  m.kappa_theta = std::max(m.kappa_theta, 1e-3);
  return m;
}

namespace {

std::string fmt(double v) { return format_double(v); }

void add(std::vector<Check>& out, std::string name, bool ok, std::string detail) {
  out.push_back({std::move(name), ok, std::move(detail)});
}

void add_simulation(std::vector<Check>& out, const std::string& prefix, const SimulationReport& rep) {
  std::string detail = std::to_string(rep.pairs.size()) + " routes, " + std::to_string(rep.audited_hops) +
                       " audited hops, " + std::to_string(rep.violations) + " violations";
  if (!rep.violation_log.empty()) detail += "; first: " + rep.violation_log.front();
  add(out, prefix + ".invariants", rep.violations == 0, detail);
}

}  // namespace

std::vector<Check> verify(const UnitDiskGraph& g, std::string_view component, const VerifyOptions& opt) {
  std::vector<Check> out;
  const std::size_t n = g.size();
  const DistanceMatrix oracle = all_pairs(g.topology());
  const Network net(g, opt.port_seed);

  if (component == "spanner") {
    const PlanarSpanner h = build_spanner(g);
    const SpannerStats st = measure_spanner(g, h, oracle);
    add(out, "spanner.subgraph", st.subgraph, "every edge is a graph edge with equal weight");
    add(out, "spanner.planar", st.plane, "no two straight-line edges cross");
    add(out, "spanner.edge_count", n < 3 || st.edges <= 3 * n - 6, std::to_string(st.edges) + " edges");
    add(out, "spanner.connected", st.connected, "");
    add(out, "spanner.stretch", st.stretch <= kSpannerStretchBound, "max d_H/d = " + fmt(st.stretch));
  } else if (component == "cover") {
    const PlanarSpanner h = build_spanner(g);
    const SparseCover cover = build_cover(h.graph, opt.cover_radius);
    const CoverStats st = measure_cover(h.graph, cover, all_pairs(h.graph));
    add(out, "cover.ball_in_home", st.ball_violations == 0, std::to_string(st.ball_violations) + " violations");
    add(out, "cover.diameter", st.beta <= kCoverDiameterFactor, "beta = " + fmt(st.beta));
    add(out, "cover.connected", st.disconnected == 0, std::to_string(st.disconnected) + " disconnected clusters");
    add(out, "cover.overlap", true,
        std::to_string(st.overlap) + (st.overlap > kOverlapWarning ? " (warning: above 32)" : ""));
  } else if (component == "lowdiam") {
    const LowDiamScheme scheme(g, std::min(opt.epsilon, 1.0));
    const RzStats st = measure_rz(g, scheme.sets(), oracle);
    add(out, "lowdiam.rep_within_eps", st.rep_violations == 0, std::to_string(st.rep_violations) + " violations");
    add(out, "lowdiam.skeleton_connected", st.skeleton_connected, "");
    add(out, "lowdiam.skeleton_distances", st.lower_violations + st.upper_violations == 0,
        std::to_string(st.lower_violations + st.upper_violations) + " violations, worst d_Z/d = " + fmt(st.worst_ratio));
    const SimulationReport rep = simulate(LowDiamRouter(scheme, n), net, oracle);
    add_simulation(out, "lowdiam", rep);
    add(out, "lowdiam.stretch", rep.max_stretch <= 1.0 + 64.0 * scheme.epsilon(),
        "max stretch " + fmt(rep.max_stretch) + " vs bound " + fmt(1.0 + 64.0 * scheme.epsilon()));
  } else if (component == "decomposition") {
    const DecompositionTree tree = build_decomposition(g, opt.epsilon, oracle.max_finite());
    const ThetaStats st = measure_theta(tree, g, oracle);
    add(out, "decomposition.structure", st.structure_violations == 0,
        st.structure_log.empty() ? "" : st.structure_log.front());
    const double limit = 4.0 * std::log2(static_cast<double>(n)) + 8.0;
    add(out, "decomposition.height", static_cast<double>(tree.height()) <= limit,
        "height " + std::to_string(tree.height()) + ", max portals " + std::to_string(tree.max_portals()));
    add(out, "decomposition.theta_lower", st.lower_violations == 0, std::to_string(st.lower_violations) + " violations");
    add(out, "decomposition.theta_upper", st.kappa_theta <= 8.0,
        "kappa_theta = " + fmt(st.kappa_theta) + " at (" + std::to_string(st.worst_s) + "," +
            std::to_string(st.worst_t) + ")");
  } else if (component == "additive") {
    const AdditiveScheme scheme(g, opt.epsilon);
    const SimulationReport rep = simulate(AdditiveRouter(scheme, n), net, oracle);
    add_simulation(out, "additive", rep);
    const double kappa = additive_constant(rep, opt.epsilon, scheme.diameter());
    add(out, "additive.stretch", kappa <= 16.0, "kappa_a = " + fmt(kappa));
  } else if (component == "hierarchical") {
    PreprocessOptions pre;
    pre.calibrated = opt.calibrated;
    pre.seed = opt.port_seed;
    const HierarchicalScheme scheme = HierarchicalScheme::preprocess(g, opt.eps_target, pre);
    std::size_t bad_home = 0;
    for (VertexId v = 0; v < n; ++v) {
      for (int k = scheme.config().k0; k <= scheme.config().k_max; ++k) {
        const auto homes = std::count_if(scheme.label(v).tuples.begin(), scheme.label(v).tuples.end(),
                                         [&](const LevelTuple& t) { return t.k == k && t.home; });
        if (homes != 1) ++bad_home;
      }
    }
    add(out, "hierarchical.home_unique", bad_home == 0, std::to_string(bad_home) + " (vertex, level) violations");
    const SimulationReport rep = simulate(HierarchicalRouter(scheme), net, oracle);
    add_simulation(out, "hierarchical", rep);
    const double bound = 1.0 + opt.eps_target;
    add(out, "hierarchical.stretch", opt.calibrated ? rep.max_stretch <= bound : true,
        "max stretch " + fmt(rep.max_stretch) + (opt.calibrated ? " vs bound " + fmt(bound) : " (uncalibrated, reported)"));
  } else {
    throw Error(ErrorKind::kInvalidInput, "unknown component '" + std::string(component) + "'");
  }
  return out;
}

}  // namespace udgroute

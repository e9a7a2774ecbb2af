#include "udgroute/simulate.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "udgroute/errors.hpp"

namespace udgroute {

std::size_t step_cap(std::size_t n, std::size_t levels) { return 16 * n * std::max<std::size_t>(levels, 1); }

std::vector<VertexId> route_path(const Router& router, const Network& net, VertexId s, VertexId t, std::size_t cap) {
  std::vector<VertexId> path{s};
  for (VertexId v = s; v != t;) {
    if (path.size() > cap) {
      throw Error(ErrorKind::kNonTermination,
                  "route " + std::to_string(s) + "->" + std::to_string(t) + " exceeded " + std::to_string(cap) + " hops");
    }
    const Port p = router.route(v, t, net.broadcast(v));
    const VertexId next = p == 0 ? kNoVertex : net.node(v, p);
    if (next == kNoVertex) {
      throw Error(ErrorKind::kNotANeighbor, "vertex " + std::to_string(v) + " chose invalid port " + std::to_string(p));
    }
    path.push_back(next);
    v = next;
  }
  return path;
}

double path_length(const UnitDiskGraph& g, const std::vector<VertexId>& path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) total += distance(g.site(path[i - 1]), g.site(path[i]));
  return total;
}

namespace {

std::string trace(const std::vector<VertexId>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? " " : "") + std::to_string(path[i]);
  return out;
}

// Length from the graph's own weight table, independent of path_length.
double weight_sum(const UnitDiskGraph& g, const std::vector<VertexId>& path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const std::ptrdiff_t k = g.topology().neighbor_index(path[i - 1], path[i]);
    total += g.neighbors(path[i - 1])[static_cast<std::size_t>(k)].weight;
  }
  return total;
}

}  // namespace

SimulationReport simulate(const Router& router, const Network& net, const DistanceMatrix& oracle,
                          const SimulationOptions& options) {
  const UnitDiskGraph& g = *net.graph;
  const std::size_t n = g.size();
  SimulationReport rep;
  rep.scheme = std::string(router.name());
  rep.n = n;
  rep.all_pairs = options.all_pairs;
  rep.sample_seed = options.sample_seed;
  rep.cap = step_cap(n, router.level_count());

  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (options.all_pairs) {
    for (VertexId s = 0; s < n; ++s) {
      for (VertexId t = 0; t < n; ++t) {
        if (s != t) pairs.emplace_back(s, t);
      }
    }
  } else {
    std::mt19937_64 rng(options.sample_seed);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    while (pairs.size() < options.sample) {
      const VertexId s = pick(rng), t = pick(rng);
      if (s != t) pairs.emplace_back(s, t);
    }
  }

  auto violation = [&](std::string msg) {
    ++rep.violations;
    if (rep.violation_log.size() < options.keep_violations) rep.violation_log.push_back(std::move(msg));
  };

  double stretch_sum = 0.0;
  rep.min_stretch = kInfinity;
  rep.max_stretch = 0.0;
  std::size_t replayed = 0;
  for (const auto& [s, t] : pairs) {
    std::vector<VertexId> path;
    try {
      path = route_path(router, net, s, t, rep.cap);
    } catch (const Error& e) {
      violation(std::string(e.what()));
      continue;
    }
    if (options.audit) {
      for (std::size_t i = 1; i < path.size(); ++i) {
        ++rep.audited_hops;
        try {
          if (auto bad = router.audit_hop(path[i - 1], path[i], t)) violation(*bad + " | route " + trace(path));
        } catch (const Error& e) {
          violation(std::string(e.what()) + " | route " + trace(path));
        }
      }
    }
    if (replayed < options.suffix_checks) {
      ++replayed;
      if (auto bad = check_suffix(router, net, s, t)) violation(*bad);
    }
    PairResult r{s, t, path_length(g, path), oracle(s, t), path.size() - 1};
    if (r.routed != weight_sum(g, path)) violation("route length recomputation differs | route " + trace(path));
    rep.max_stretch = std::max(rep.max_stretch, r.stretch());
    rep.min_stretch = std::min(rep.min_stretch, r.stretch());
    rep.max_excess = std::max(rep.max_excess, r.routed - r.shortest);
    rep.max_hops = std::max(rep.max_hops, r.hops);
    stretch_sum += r.stretch();
    rep.pairs.push_back(r);
  }
  if (rep.pairs.empty()) {
    rep.min_stretch = rep.max_stretch = 1.0;
  }
  rep.mean_stretch = rep.pairs.empty() ? 1.0 : stretch_sum / static_cast<double>(rep.pairs.size());

  for (VertexId v = 0; v < n; ++v) {
    const std::size_t bits = router.label_bits(v);
    rep.max_label_bits = std::max(rep.max_label_bits, bits);
    rep.total_label_bits += bits;
  }
  rep.mean_label_bits = static_cast<double>(rep.total_label_bits) / static_cast<double>(n);
  return rep;
}

std::optional<std::string> check_suffix(const Router& router, const Network& net, VertexId s, VertexId t) {
  const std::size_t cap = step_cap(net.graph->size(), router.level_count());
  const std::vector<VertexId> path = route_path(router, net, s, t, cap);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const std::vector<VertexId> again = route_path(router, net, path[i], t, cap);
    if (!std::equal(again.begin(), again.end(), path.begin() + static_cast<std::ptrdiff_t>(i), path.end())) {
      return "rerouting from " + std::to_string(path[i]) + " leaves the route " + trace(path);
    }
  }
  return std::nullopt;
}

void write_pairs_csv(std::ostream& out, const SimulationReport& report) {
  out << "s,t,routed,shortest,stretch,hops\n";
  for (const PairResult& r : report.pairs) {
    out << r.s << ',' << r.t << ',' << format_double(r.routed) << ',' << format_double(r.shortest) << ','
        << format_double(r.stretch()) << ',' << r.hops << '\n';
  }
}

}  // namespace udgroute

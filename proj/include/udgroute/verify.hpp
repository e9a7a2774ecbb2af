#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "udgroute/cover.hpp"
#include "udgroute/decomposition.hpp"
#include "udgroute/geometry.hpp"
#include "udgroute/hierarchical.hpp"
#include "udgroute/lowdiam.hpp"
#include "udgroute/simulate.hpp"
#include "udgroute/spanner.hpp"

namespace udgroute {

struct SpannerStats {
  bool subgraph = true;  // every edge is a graph edge of equal weight
  bool plane = true;
  bool connected = true;
  std::size_t edges = 0;
  double stretch = 1.0;  // max d_H / d
};
SpannerStats measure_spanner(const UnitDiskGraph& g, const PlanarSpanner& h, const DistanceMatrix& oracle);

struct CoverStats {
  std::size_t ball_violations = 0;  // w within r of v but outside home(v)
  std::size_t disconnected = 0;     // clusters with a disconnected induced subgraph
  double beta = 0.0;                // max cluster diameter / r
  std::size_t overlap = 0;
  std::size_t clusters = 0;
};
CoverStats measure_cover(const WeightedGraph& h, const SparseCover& cover, const DistanceMatrix& h_oracle);

struct RzStats {
  std::size_t rep_violations = 0;    // |v rep(v)| > eps
  std::size_t lower_violations = 0;  // d_Z < d
  std::size_t upper_violations = 0;  // d_Z > (1 + 12 eps) d + 12 eps
  double worst_ratio = 1.0;          // max d_Z / d over distinct cluster vertices
  bool skeleton_connected = true;
};
RzStats measure_rz(const UnitDiskGraph& g, const ClusterSets& sets, const DistanceMatrix& oracle);

struct ThetaStats {
  std::size_t structure_violations = 0;
  std::vector<std::string> structure_log;
  std::size_t lower_violations = 0;  // theta < d
  double kappa_theta = 0.0;          // max (theta - d) / (eps D)
  VertexId worst_s = 0;
  VertexId worst_t = 0;
};
ThetaStats measure_theta(const DecompositionTree& tree, const UnitDiskGraph& g, const DistanceMatrix& oracle);

/// max (routed - shortest) / (eps D) over a report.
double additive_constant(const SimulationReport& report, double eps, double diam);

/// Maximum cover factor, additive excess and oracle excess observed on a
/// calibration suite at parameter eps (covers probed at radii 1, 2, 4, 8).
MeasuredConstants measure_constants(const std::vector<UnitDiskGraph>& suite, double eps);

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyOptions {
  double epsilon = 0.25;      // lowdiam, decomposition and additive
  double eps_target = 1.0;    // hierarchical
  bool calibrated = true;
  double cover_radius = 2.0;
  std::uint64_t port_seed = 1;
};

/// Components: spanner, cover, lowdiam, decomposition, additive,
/// hierarchical. Throws InvalidInput for anything else.
std::vector<Check> verify(const UnitDiskGraph& g, std::string_view component, const VerifyOptions& options = {});

inline const std::vector<std::string>& verify_components() {
  static const std::vector<std::string> all{"spanner", "cover", "lowdiam", "decomposition", "additive", "hierarchical"};
  return all;
}

}  // namespace udgroute

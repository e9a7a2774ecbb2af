#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "../support.hpp"
#include "udgroute/hierarchical.hpp"
#include "udgroute/simulate.hpp"

using namespace udgroute;

namespace {

HierarchicalScheme uncalibrated(const UnitDiskGraph& g, double eps) {
  PreprocessOptions options;
  options.calibrated = false;
  return HierarchicalScheme::preprocess(g, eps, options);
}

}  // namespace

TEST_CASE("first level") {
  CHECK(first_level(1.0) == 3);
  CHECK(first_level(0.5) == 4);
  CHECK(first_level(0.3) == 5);
}

TEST_CASE("calibration") {
  const MeasuredConstants m;
  CHECK(calibration_factor(m) == doctest::Approx(2048.0));
  CHECK(calibrate(1.0, m) == doctest::Approx(1.0 / 2048));
  CHECK(calibrate(0.5, m) < calibrate(1.0, m));
  MeasuredConstants bigger = m;
  bigger.kappa_a = 100.0;
  CHECK(calibrate(1.0, bigger) < calibrate(1.0, m));
  CHECK(calibrate(1.0, worst_case_constants()) <= std::ldexp(1.0, -15));
  CHECK(testing::error_kind([&] { calibrate(0.0, m); }) == ErrorKind::kInvalidEpsilon);
  CHECK(testing::error_kind([&] { calibrate(1.5, m); }) == ErrorKind::kInvalidEpsilon);
  MeasuredConstants broken = m;
  broken.beta = 0.0;
  CHECK(testing::error_kind([&] { calibrate(1.0, broken); }) == ErrorKind::kCalibrationFailed);
  broken.beta = NAN;
  CHECK(testing::error_kind([&] { calibrate(1.0, broken); }) == ErrorKind::kCalibrationFailed);
}

TEST_CASE("calibrated P5 collapses to a single exact level") {
  const UnitDiskGraph g = testing::p5();
  const HierarchicalScheme scheme = HierarchicalScheme::preprocess(g, 1.0);
  CHECK(scheme.config().level_count() == 1);
  CHECK(scheme.levels()[0].clamped);
  for (const TopLabel& l : scheme.labels()) {
    REQUIRE(l.tuples.size() == 1);
    CHECK(l.tuples[0].home);
  }
  const Network net(g, 1);
  const SimulationReport rep = simulate(HierarchicalRouter(scheme), net, all_pairs(g.topology()));
  CHECK(rep.violations == 0);
  CHECK(rep.max_stretch == doctest::Approx(1.0));
}

TEST_CASE("uncalibrated levels: one home per level and tuples match the covers") {
  const UnitDiskGraph g = testing::random_udg(160, 5);
  const HierarchicalScheme scheme = uncalibrated(g, 0.5);
  const SchemeConfig& cfg = scheme.config();
  CHECK(cfg.k0 == 4);
  CHECK(cfg.epsilon == 0.5);
  CHECK(cfg.level_count() >= 2);
  CHECK(std::ldexp(1.0, cfg.k_max) >= 2 * cfg.diameter);
  CHECK(scheme.levels().back().clamped);
  for (VertexId v = 0; v < g.size(); ++v) {
    const TopLabel& l = scheme.label(v);
    for (const Level& level : scheme.levels()) {
      std::size_t homes = 0, tuples = 0;
      for (const LevelTuple& t : l.tuples) {
        if (t.k != level.k) continue;
        ++tuples;
        if (t.home) {
          ++homes;
          CHECK(t.cluster == level.cover.home[v]);
        }
      }
      CHECK(homes == 1);
      CHECK(tuples == level.cover.clusters_of(v).size());
    }
  }
  CHECK(scheme.measured_beta() <= kCoverDiameterFactor);
}

TEST_CASE("level monotonicity and stretch on an uncalibrated scheme") {
  const UnitDiskGraph g = testing::random_udg(140, 8);
  const HierarchicalScheme scheme = uncalibrated(g, 0.5);
  const Network net(g, 3);
  const SimulationReport rep = simulate(HierarchicalRouter(scheme), net, all_pairs(g.topology()));
  CAPTURE(rep.violation_log);
  CHECK(rep.violations == 0);
  CHECK(rep.max_stretch <= 1.0 + 64 * 0.5);
}

TEST_CASE("calibrated scheme meets the target stretch") {
  const UnitDiskGraph g = testing::random_udg(120, 12);
  const HierarchicalScheme scheme = HierarchicalScheme::preprocess(g, 0.5);
  const SimulationReport rep = simulate(HierarchicalRouter(scheme), Network(g, 1), all_pairs(g.topology()));
  CHECK(rep.violations == 0);
  CHECK(rep.max_stretch <= 1.5);
}

TEST_CASE("labels do not depend on ports, so routes do not either") {
  const UnitDiskGraph g = testing::random_udg(100, 6);
  const HierarchicalScheme scheme = uncalibrated(g, 0.5);
  const HierarchicalRouter router(scheme);
  const Network a(g, 1), b(g, 99);
  const std::size_t cap = step_cap(g.size(), router.level_count());
  for (VertexId s = 0; s < g.size(); s += 7) {
    for (VertexId t = 0; t < g.size(); t += 5) {
      if (s != t) CHECK(route_path(router, a, s, t, cap) == route_path(router, b, s, t, cap));
    }
  }
}

TEST_CASE("label store round-trips") {
  const UnitDiskGraph g = testing::random_udg(90, 2);
  const HierarchicalScheme scheme = uncalibrated(g, 0.5);
  const auto path = std::filesystem::temp_directory_path() / "udgroute_unit_labels.bin";
  save_label_store(path.string(), scheme);
  const LabelStore store = load_label_store(path.string());
  std::filesystem::remove(path);
  CHECK(store.n == g.size());
  CHECK(store.config.k0 == scheme.config().k0);
  CHECK(store.config.k_max == scheme.config().k_max);
  CHECK(store.config.epsilon == scheme.config().epsilon);
  CHECK(store.config.calibrated == false);
  REQUIRE(store.labels.size() == g.size());
  for (VertexId v = 0; v < g.size(); ++v) CHECK(store.labels[v] == scheme.label(v));

  const Network net(g, 4);
  const StoredLabelRouter stored(store);
  const HierarchicalRouter live(scheme);
  const std::size_t cap = step_cap(g.size(), live.level_count());
  for (VertexId s = 0; s < g.size(); s += 13) {
    CHECK(route_path(stored, net, s, 0, cap) == route_path(live, net, s, 0, cap));
  }
}

TEST_CASE("corrupt label stores are rejected") {
  const auto path = std::filesystem::temp_directory_path() / "udgroute_unit_bad.bin";
  {
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    std::fputs("NOTALABELSTORE", f);
    std::fclose(f);
  }
  CHECK(testing::error_kind([&] { load_label_store(path.string()); }) == ErrorKind::kMalformedData);
  std::filesystem::remove(path);
}

TEST_CASE("dispatch needs a level where t's home cluster holds s") {
  TopLabel s{0, {}}, t{1, {}};
  CHECK(testing::error_kind([&] { dispatch(s, t); }) == ErrorKind::kNoCommonLevel);
}

TEST_CASE("dispatched level brackets the distance") {
  // k > k0 means s missed t's home ball one level down, so d_H > 2^(k-1) and d > 2^(k-3).
  for (const UnitDiskGraph& g : {testing::p5(), testing::random_udg(150, 14)}) {
    for (double eps : {1.0, 0.5}) {
      const HierarchicalScheme scheme = uncalibrated(g, eps);
      const DistanceMatrix d = all_pairs(g.topology());
      const double beta = kCoverDiameterFactor;
      for (VertexId s = 0; s < g.size(); ++s) {
        for (VertexId t = 0; t < g.size(); ++t) {
          if (s == t) continue;
          const int k = dispatch(scheme.label(s), scheme.label(t)).k;
          CHECK(d(s, t) <= beta * std::ldexp(1.0, k));
          if (k > scheme.config().k0) CHECK(d(s, t) > std::ldexp(1.0, k - 3));
        }
      }
    }
  }
}

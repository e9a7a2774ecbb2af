#include <doctest.h>

#include "../support.hpp"
#include "udgroute/cover.hpp"
#include "udgroute/spanner.hpp"
#include "udgroute/verify.hpp"

using namespace udgroute;

TEST_CASE("radius at least the diameter gives one cluster") {
  const UnitDiskGraph g = testing::random_udg(60, 3);
  const SparseCover c = build_cover(g.topology(), diameter(g));
  REQUIRE(c.clusters.size() == 1);
  CHECK(c.clusters[0].size() == g.size());
  CHECK(c.overlap == 1);
}

TEST_CASE("P5 at radius 0.8 has centers 0, 2, 4") {
  const UnitDiskGraph g = testing::p5();
  const SparseCover c = build_cover(g.topology(), 0.8);
  CHECK(c.centers == std::vector<VertexId>{0, 2, 4});
  CHECK(c.home == std::vector<std::uint32_t>{0, 0, 1, 1, 2});
  CHECK(c.clusters[0] == std::vector<VertexId>{0, 1, 2});
  CHECK(c.clusters[1] == std::vector<VertexId>{0, 1, 2, 3, 4});
  CHECK(c.clusters_of(4) == std::vector<std::uint32_t>{1, 2});
}

TEST_CASE("non-positive radius is rejected") {
  const UnitDiskGraph g = testing::p5();
  CHECK(testing::error_kind([&] { build_cover(g.topology(), 0.0); }) == ErrorKind::kInvalidInput);
}

TEST_CASE("home clusters contain every r-ball and diameters stay within 4r") {
  for (GeneratorKind kind : {GeneratorKind::kUniformSquare, GeneratorKind::kClusteredGaussian}) {
    const UnitDiskGraph g = testing::random_udg(200, 6, kind);
    const PlanarSpanner h = build_spanner(g);
    const DistanceMatrix oracle = all_pairs(h.graph);
    for (double r : {1.0, 2.0, 4.0}) {
      const SparseCover c = build_cover(h.graph, r);
      const CoverStats st = measure_cover(h.graph, c, oracle);
      CHECK(st.ball_violations == 0);
      CHECK(st.disconnected == 0);
      CHECK(st.beta <= kCoverDiameterFactor);
      CHECK(cover_diameter_ratio(h.graph, c) == doctest::Approx(st.beta));
      for (VertexId v = 0; v < g.size(); ++v) {
        const auto mine = c.clusters_of(v);
        CHECK(std::binary_search(mine.begin(), mine.end(), c.home[v]));
        CHECK(oracle(v, c.centers[c.home[v]]) <= r);
      }
    }
  }
}

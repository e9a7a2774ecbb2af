#include <doctest.h>

#include "../support.hpp"
#include "udgroute/spanner.hpp"
#include "udgroute/verify.hpp"

using namespace udgroute;

TEST_CASE("spanner of P5 is P5 itself") {
  const UnitDiskGraph g = testing::p5();
  const PlanarSpanner h = build_spanner(g);
  REQUIRE(h.edges.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(h.edges[i].u == i);
    CHECK(h.edges[i].v == i + 1);
  }
  CHECK(h.stretch == doctest::Approx(1.0));
}

TEST_CASE("a square of side 0.9 keeps exactly its four sides") {
  // Both diagonals (length 1.27) exceed the unit radius, so only sides survive.
  const UnitDiskGraph g = build_udg({{0, 0, 0}, {1, 0.9, 0}, {2, 0.9, 0.9}, {3, 0, 0.9}});
  const PlanarSpanner h = build_spanner(g);
  CHECK(g.edge_count() == 4);
  CHECK(h.edges.size() == 4);
  CHECK(is_plane_drawing(g, h.edges));
}

TEST_CASE("a tight square keeps one diagonal and stays plane") {
  const UnitDiskGraph g = build_udg({{0, 0, 0}, {1, 0.6, 0.01}, {2, 0.61, 0.6}, {3, 0, 0.59}});
  CHECK(g.edge_count() == 6);
  const PlanarSpanner h = build_spanner(g);
  CHECK(h.edges.size() == 5);
  CHECK(is_plane_drawing(g, h.edges));
}

TEST_CASE("spanner on 300 sites: sparse, plane, connected, bounded stretch") {
  const UnitDiskGraph g = testing::random_udg(300, 21);
  const PlanarSpanner h = build_spanner(g);
  CHECK(h.edges.size() <= 3 * g.size() - 6);
  const SpannerStats st = measure_spanner(g, h, all_pairs(g.topology()));
  CHECK(st.subgraph);
  CHECK(st.plane);
  CHECK(st.connected);
  CHECK(st.stretch <= kSpannerStretchBound);
  CHECK(st.stretch == doctest::Approx(h.stretch));
}

TEST_CASE("crossing detection flags a proper crossing") {
  const UnitDiskGraph g = build_udg({{0, 0, 0}, {1, 0.6, 0.6}, {2, 0.6, 0}, {3, 0, 0.6}});
  CHECK(!is_plane_drawing(g, {{0, 1, 0.0}, {2, 3, 0.0}}));
  CHECK(is_plane_drawing(g, {{0, 2, 0.0}, {3, 1, 0.0}}));
}

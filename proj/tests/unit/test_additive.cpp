#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "udgroute/additive.hpp"
#include "udgroute/simulate.hpp"

using namespace udgroute;

namespace {

PortalEntry entry(VertexId portal, std::int64_t d, std::uint32_t low, std::uint32_t post) {
  PortalEntry e;
  e.portal = portal;
  e.dist_c = d;
  e.tree.low = low;
  e.tree.post = post;
  return e;
}

}  // namespace

TEST_CASE("floor quantization is monotone and subadditive within one unit") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> x(0.0, 50.0);
  const Quantizer q = Quantizer::make(200, 0.25, 12.5);
  CHECK(q.c == doctest::Approx(64.0));
  for (int i = 0; i < 10000; ++i) {
    const double a = x(rng), b = x(rng);
    CHECK(q(a) <= a * q.c);
    CHECK(q(a) > a * q.c - 1);
    CHECK(q(a + b) >= q(a) + q(b));
    CHECK(q(a + b) <= q(a) + q(b) + 1);
    if (a <= b) CHECK(q(a) <= q(b));
  }
}

TEST_CASE("per-portal theta: difference below s, sum elsewhere") {
  const PortalEntry s = entry(4, 10, 0, 5);  // subtree covers postorder 0..5
  CHECK(theta_c(s, entry(4, 13, 2, 2)) == 3);
  CHECK(theta_c(s, entry(4, 13, 6, 7)) == 23);
  CHECK(theta_c(entry(4, 0, 0, 9), entry(4, 7, 3, 3)) == 7);  // s is the portal
}

TEST_CASE("label-level theta takes the lexicographic minimum and needs a common portal") {
  AdditiveLabel s{1, {entry(2, 5, 0, 0), entry(7, 4, 0, 0), entry(9, 1, 0, 0)}};
  AdditiveLabel t{3, {entry(7, 3, 1, 1), entry(9, 6, 1, 1)}};
  const ThetaChoice c = theta_c(s, t);
  CHECK(c.value == 7);
  CHECK(c.portal == 7);  // ties with portal 9 go to the smaller id
  CHECK(c.s_index == 1);
  CHECK(c.t_index == 0);
  const AdditiveLabel u{4, {entry(5, 0, 0, 0)}};
  CHECK(testing::error_kind([&] { theta_c(s, u); }) == ErrorKind::kNoCommonPortal);
}

TEST_CASE("labels hold floored distances to every portal on the owner chain") {
  const UnitDiskGraph g = testing::random_udg(140, 9);
  const AdditiveScheme scheme(g, 0.25);
  const DecompositionTree& tree = scheme.decomposition();
  const Quantizer& q = scheme.quantizer();
  CHECK(q.c == doctest::Approx(g.size() / (0.25 * diameter(g))));
  const DistanceMatrix d = all_pairs(g.topology());
  for (VertexId v = 0; v < g.size(); ++v) {
    const AdditiveLabel& l = scheme.label(v);
    std::size_t expected = 0;
    for (std::uint32_t id : tree.chain(v)) {
      const DecompNode& node = tree.node(id);
      expected += node.portals.size();
      for (const PortalTree& pt : node.trees) {
        const PortalEntry* e = l.find(pt.portal);
        REQUIRE(e != nullptr);
        CHECK(e->dist_c == q(pt.dist[node.local(v)]));
      }
    }
    CHECK(l.entries.size() == expected);
    for (VertexId t = 0; t < g.size(); t += 11) {
      if (t == v) continue;
      // theta_c never undershoots c d by more than the rounding of two floors
      // and never exceeds c theta + 1.
      const ThetaChoice c = theta_c(l, scheme.label(t));
      const double theta = oracle_theta(tree, v, t);
      CHECK(static_cast<double>(c.value) <= q.c * theta + 1.0);
      CHECK(static_cast<double>(c.value) >= q.c * d(v, t) - 2.0);
    }
  }
}

TEST_CASE("routing on P5 is exact") {
  const UnitDiskGraph g = testing::p5();
  const AdditiveScheme scheme(g, 0.5);
  const Network net(g, 4);
  const SimulationReport rep = simulate(AdditiveRouter(scheme, g.size()), net, all_pairs(g.topology()));
  CHECK(rep.violations == 0);
  CHECK(rep.max_stretch == doctest::Approx(1.0));
  CHECK(rep.max_hops == 4);
}

TEST_CASE("hop invariants hold and the excess stays within 16 eps D") {
  for (GeneratorKind kind : {GeneratorKind::kUniformSquare, GeneratorKind::kGridPerturbed}) {
    const UnitDiskGraph g = testing::random_udg(120, 31, kind);
    const AdditiveScheme scheme(g, 0.25);
    const Network net(g, 2);
    const SimulationReport rep = simulate(AdditiveRouter(scheme, g.size()), net, all_pairs(g.topology()));
    CAPTURE(rep.violation_log);
    CHECK(rep.violations == 0);
    CHECK(rep.audited_hops > 0);
    CHECK(rep.max_excess <= 16.0 * 0.25 * scheme.diameter());
  }
}

TEST_CASE("the audit rejects a hop that leaves the portal tree path") {
  const UnitDiskGraph g = testing::random_udg(100, 4);
  const AdditiveScheme scheme(g, 0.25);
  std::size_t rejected = 0;
  for (VertexId s = 0; s < g.size() && rejected == 0; ++s) {
    const VertexId t = (s + 50) % g.size();
    if (g.adjacent(s, t)) continue;
    const VertexId good = additive_next_vertex(scheme.label(s), scheme.label(t));
    CHECK(!scheme.audit_hop(s, good, t));
    for (const Neighbor& nb : g.neighbors(s)) {
      if (nb.id != good && scheme.audit_hop(s, nb.id, t)) ++rejected;
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("additive labels round-trip through the bit encoding") {
  const UnitDiskGraph g = testing::random_udg(80, 1);
  const AdditiveScheme scheme(g, 0.5);
  const BitLayout layout = BitLayout::for_graph(g.size());
  for (VertexId v = 0; v < g.size(); v += 9) {
    BitWriter w;
    encode(w, scheme.label(v), layout);
    CHECK(w.bit_count() == encoded_bits(scheme.label(v), layout));
    BitReader r(w.bytes());
    CHECK(decode_additive_label(r, layout) == scheme.label(v));
  }
}

#include <doctest.h>

#include "../support.hpp"
#include "udgroute/lowdiam.hpp"
#include "udgroute/simulate.hpp"
#include "udgroute/verify.hpp"

using namespace udgroute;

TEST_CASE("clustering parameter must lie in (0, 1]") {
  const UnitDiskGraph g = testing::p5();
  CHECK(testing::error_kind([&] { build_rz(g, 0.0); }) == ErrorKind::kInvalidEpsilon);
  CHECK(testing::error_kind([&] { build_rz(g, 1.5); }) == ErrorKind::kInvalidEpsilon);
}

TEST_CASE("sites inside one cell share a single representative") {
  const UnitDiskGraph g = build_udg({{0, 0.01, 0.01}, {1, 0.1, 0.05}, {2, 0.2, 0.3}, {3, 0.05, 0.25}});
  const ClusterSets sets = build_rz(g, 1.0);
  CHECK(sets.cluster == std::vector<VertexId>{0});
  for (VertexId v = 0; v < 4; ++v) {
    CHECK(sets.rep[v] == 0);
    CHECK((v == 0 || g.adjacent(v, 0)));
  }
}

TEST_CASE("P5 at eps = 1 puts every site in its own cell") {
  const UnitDiskGraph g = testing::p5();
  const ClusterSets sets = build_rz(g, 1.0);
  const std::vector<VertexId> all{0, 1, 2, 3, 4};
  CHECK(sets.cluster == all);
  CHECK(sets.skeleton == all);
  for (VertexId v = 0; v < 5; ++v) CHECK(sets.rep[v] == v);
}

TEST_CASE("skeleton distances approximate graph distances between cluster vertices") {
  const UnitDiskGraph g = testing::random_udg(200, 4);
  const DistanceMatrix oracle = all_pairs(g.topology());
  const ClusterSets sets = build_rz(g, 0.5);
  const RzStats st = measure_rz(g, sets, oracle);
  CHECK(st.rep_violations == 0);
  CHECK(st.lower_violations == 0);
  CHECK(st.upper_violations == 0);
  CHECK(st.skeleton_connected);
  CHECK(std::includes(sets.skeleton.begin(), sets.skeleton.end(), sets.cluster.begin(), sets.cluster.end()));
}

TEST_CASE("labels embed the representative's tree") {
  const UnitDiskGraph g = testing::random_udg(120, 8);
  const LowDiamScheme scheme(g, 0.5);
  const ClusterSets& sets = scheme.sets();
  std::size_t non_cluster = 0;
  for (VertexId v = 0; v < g.size(); ++v) {
    const LowDiamLabel& l = scheme.label(v);
    CHECK(l.is_cluster == sets.is_cluster(v));
    CHECK(l.cluster_vertex() == sets.rep[v]);
    CHECK(l.tree.edges.size() + 1 == sets.skeleton.size());
    if (!l.is_cluster) {
      ++non_cluster;
      CHECK(l.tree == scheme.label(sets.rep[v]).tree);
    }
    for (VertexId z : sets.skeleton) CHECK(l.tree.contains(z));
  }
  CHECK(non_cluster > 0);
  const BitLayout layout = BitLayout::for_graph(g.size());
  for (VertexId v : {0u, 5u, 77u}) {
    BitWriter w;
    encode(w, scheme.label(v), layout);
    CHECK(w.bit_count() == encoded_bits(scheme.label(v), layout));
    BitReader r(w.bytes());
    CHECK(decode_lowdiam_label(r, layout) == scheme.label(v));
  }
}

TEST_CASE("routing rules: direct hop, tree hop, representative hop") {
  const UnitDiskGraph g = testing::random_udg(150, 12);
  const LowDiamScheme scheme(g, 0.25);
  const Network net(g, 5);
  const ClusterSets& sets = scheme.sets();
  bool saw_rep_hop = false;
  for (VertexId s = 0; s < g.size(); ++s) {
    for (VertexId t = 0; t < g.size(); t += 7) {
      if (s == t) continue;
      const VertexId next = lowdiam_next_vertex(scheme.label(s), scheme.label(t), net.broadcast(s));
      if (g.adjacent(s, t)) {
        CHECK(next == t);
      } else if (!std::binary_search(sets.skeleton.begin(), sets.skeleton.end(), s)) {
        CHECK(next == sets.rep[s]);
        saw_rep_hop = true;
      }
      CHECK(net.node(s, sigma_diam(scheme.label(s), scheme.label(t), net.broadcast(s))) == next);
    }
  }
  CHECK(saw_rep_hop);
}

TEST_CASE("all-pairs stretch stays within 1 + 64 eps and routes are short") {
  for (std::uint64_t seed : {1, 2}) {
    const UnitDiskGraph g = testing::random_udg(150, seed);
    const LowDiamScheme scheme(g, 0.25);
    const Network net(g, seed);
    const SimulationReport rep = simulate(LowDiamRouter(scheme, g.size()), net, all_pairs(g.topology()));
    CHECK(rep.violations == 0);
    CHECK(rep.max_stretch <= 17.0);
    CHECK(not_below(rep.min_stretch, 1.0));
  }
}

#include <doctest.h>

#include <cmath>

#include "../support.hpp"
#include "udgroute/tree_labels.hpp"

using namespace udgroute;

namespace {

std::vector<VertexId> route(const std::vector<TreeLabel>& labels, const RootedTree& tree, VertexId s, VertexId t) {
  std::vector<VertexId> path{s};
  const TreeLabel& target = labels[tree.index_of(t)];
  for (VertexId v = s; v != t;) {
    v = tree_next_hop(labels[tree.index_of(v)], target);
    path.push_back(v);
    REQUIRE(path.size() <= tree.size());
  }
  return path;
}

}  // namespace

TEST_CASE("single vertex tree") {
  const RootedTree tree({7}, {kNoVertex});
  const auto labels = build_tree_labels(tree);
  REQUIRE(labels.size() == 1);
  CHECK(labels[0].low == 0);
  CHECK(labels[0].post == 0);
  CHECK(labels[0].exits.empty());
  CHECK(!labels[0].parent);
  CHECK(testing::error_kind([&] { tree_next_hop(labels[0], labels[0]); }) == ErrorKind::kIncompatibleLabels);
}

TEST_CASE("a path rooted at an end has only heavy edges") {
  const RootedTree tree({0, 1, 2, 3, 4}, {kNoVertex, 0, 1, 2, 3});
  for (const TreeLabel& l : build_tree_labels(tree)) CHECK(l.exits.empty());
}

TEST_CASE("root reaches a light child through the target's exit list") {
  // 0 has children 1 (subtree {1,3,4}) and 2 (leaf): 2 is light.
  const RootedTree tree({0, 1, 2, 3, 4}, {kNoVertex, 0, 0, 1, 1});
  const auto labels = build_tree_labels(tree);
  CHECK(labels[0].heavy_child == VertexId{1});
  REQUIRE(labels[2].exits.size() == 1);
  CHECK(labels[2].exits[0] == std::pair<VertexId, VertexId>{0, 2});
  CHECK(tree_next_hop(labels[0], labels[2]) == 2);
  CHECK(tree_next_hop(labels[2], labels[3]) == 0);  // outside subtree: go up
}

TEST_CASE("heavy ties go to the smaller id and postorder visits children by id") {
  const RootedTree tree({5, 9, 3}, {kNoVertex, 5, 5});
  const auto labels = build_tree_labels(tree);
  const auto& root = labels[tree.index_of(5)];
  CHECK(root.heavy_child == VertexId{3});
  CHECK(labels[tree.index_of(3)].post == 0);
  CHECK(labels[tree.index_of(9)].post == 1);
  CHECK(root.post == 2);
  CHECK(root.low == 0);
}

TEST_CASE("malformed parent maps are rejected") {
  CHECK(testing::error_kind([] { RootedTree({0, 1}, {1, 0}); }) == ErrorKind::kInvalidInput);
  CHECK(testing::error_kind([] { RootedTree({0, 1}, {kNoVertex, kNoVertex}); }) == ErrorKind::kInvalidInput);
  CHECK(testing::error_kind([] { RootedTree({0, 1}, {kNoVertex, 8}); }) == ErrorKind::kInvalidInput);
}

TEST_CASE("labels satisfy the interval and exit-list invariants") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    const testing::RandomTree rt = testing::random_tree(n, rng);
    const RootedTree tree(rt.vertices, rt.parent);
    const auto labels = build_tree_labels(tree);
    const auto max_exits = static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(n))));
    for (std::size_t i = 0; i < n; ++i) {
      const TreeLabel& l = labels[i];
      CHECK(l.exits.size() <= max_exits);
      for (std::size_t j = 0; j < n; ++j) {
        // w in subtree(v) iff v lies on w's root path
        bool ancestor = false;
        for (VertexId x = labels[j].self; x != kNoVertex; x = rt.parent_of(x)) ancestor = ancestor || x == l.self;
        CHECK(labels[j].in_subtree_of(l) == ancestor);
      }
    }
  }
}

TEST_CASE("a random 100-vertex tree keeps exit lists within floor(log2 100)") {
  std::mt19937_64 rng(100);
  const testing::RandomTree rt = testing::random_tree(100, rng);
  const auto labels = build_tree_labels(RootedTree(rt.vertices, rt.parent));
  for (const TreeLabel& l : labels) CHECK(l.exits.size() <= 6);
}

TEST_CASE("iterated next hops follow the unique tree path") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const testing::RandomTree rt = testing::random_tree(n, rng);
    const RootedTree tree(rt.vertices, rt.parent);
    const auto labels = build_tree_labels(tree);
    for (VertexId s : rt.vertices) {
      for (VertexId t : rt.vertices) {
        if (s == t) continue;
        const auto got = route(labels, tree, s, t);
        REQUIRE(got == testing::tree_path(rt, s, t));
      }
    }
  }
}

TEST_CASE("tree labels round-trip through the bit encoding") {
  std::mt19937_64 rng(3);
  const testing::RandomTree rt = testing::random_tree(90, rng);
  const auto labels = build_tree_labels(RootedTree(rt.vertices, rt.parent));
  const BitLayout layout = BitLayout::for_graph(400);
  BitWriter w;
  for (const TreeLabel& l : labels) encode(w, l, layout);
  BitReader r(w.bytes());
  for (const TreeLabel& l : labels) CHECK(decode_tree_label(r, layout) == l);
}

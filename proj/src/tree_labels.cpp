#include "udgroute/tree_labels.hpp"

#include <algorithm>

#include "udgroute/errors.hpp"

namespace udgroute {

RootedTree::RootedTree(std::vector<VertexId> vertices, const std::vector<VertexId>& parent_of_vertex) {
  if (vertices.size() != parent_of_vertex.size() || vertices.empty()) {
    throw Error(ErrorKind::kInvalidInput, "tree needs one parent entry per vertex");
  }
  std::vector<std::uint32_t> order(vertices.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vertices[a] < vertices[b]; });
  vertices_.resize(vertices.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) vertices_[i] = vertices[order[i]];

  parent_.assign(vertices_.size(), kNoVertex);
  children_.assign(vertices_.size(), {});
  std::size_t roots = 0;
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    const VertexId p = parent_of_vertex[order[i]];
    if (p == kNoVertex) {
      root_ = i;
      ++roots;
      continue;
    }
    const std::uint32_t pi = index_of(p);
    if (pi == kNoVertex) throw Error(ErrorKind::kInvalidInput, "parent outside the tree");
    parent_[i] = pi;
    children_[pi].push_back(i);  // i ascends, so children stay sorted by id
  }
  if (roots != 1) throw Error(ErrorKind::kInvalidInput, "tree must have exactly one root");

  // Every vertex must reach the root (rules out cycles).
  std::vector<bool> reached(vertices_.size(), false);
  std::vector<std::uint32_t> stack{root_};
  std::size_t count = 0;
  reached[root_] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    ++count;
    for (auto c : children_[v]) {
      if (!reached[c]) {
        reached[c] = true;
        stack.push_back(c);
      }
    }
  }
  if (count != vertices_.size()) throw Error(ErrorKind::kInvalidInput, "parent map contains a cycle");
}

RootedTree RootedTree::from_shortest_paths(const ShortestPaths& sp, const std::vector<VertexId>& vertices) {
  std::vector<VertexId> parents(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) parents[i] = sp.parent[vertices[i]];
  return RootedTree(vertices, parents);
}

std::uint32_t RootedTree::index_of(VertexId v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return kNoVertex;
  return static_cast<std::uint32_t>(it - vertices_.begin());
}

std::vector<TreeLabel> build_tree_labels(const RootedTree& tree) {
  const std::size_t n = tree.size();
  std::vector<TreeLabel> labels(n);
  std::vector<std::uint32_t> subtree(n, 1);
  std::vector<std::uint32_t> heavy(n, kNoVertex);

  // Iterative postorder: children by increasing id.
  std::vector<std::uint32_t> post_order;
  post_order.reserve(n);
  {
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{tree.index_of(tree.root()), 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& kids = tree.children(v);
      if (next < kids.size()) {
        const auto c = kids[next++];
        stack.emplace_back(c, 0);
      } else {
        post_order.push_back(v);
        stack.pop_back();
      }
    }
  }

  for (std::uint32_t number = 0; number < n; ++number) {
    const auto v = post_order[number];
    TreeLabel& lab = labels[v];
    lab.self = tree.vertices()[v];
    lab.post = number;
    lab.low = number;
    for (auto c : tree.children(v)) {
      subtree[v] += subtree[c];
      lab.low = std::min(lab.low, labels[c].low);
      if (heavy[v] == kNoVertex || subtree[c] > subtree[heavy[v]]) heavy[v] = c;
    }
    if (heavy[v] != kNoVertex) lab.heavy_child = tree.vertices()[heavy[v]];
    if (tree.parent_index(v) != kNoVertex) lab.parent = tree.vertices()[tree.parent_index(v)];
  }

  // Exit lists top down: a child inherits its parent's list, plus one entry
  // when the connecting edge is light.
  for (auto it = post_order.rbegin(); it != post_order.rend(); ++it) {
    const auto v = *it;
    for (auto c : tree.children(v)) {
      labels[c].exits = labels[v].exits;
      if (c != heavy[v]) labels[c].exits.emplace_back(labels[v].self, labels[c].self);
    }
  }
  return labels;
}

VertexId tree_next_hop(const TreeLabel& s, const TreeLabel& t) {
  if (s.self == t.self) throw Error(ErrorKind::kIncompatibleLabels, "source and target coincide");
  if (!t.in_subtree_of(s)) {
    if (!s.parent) throw Error(ErrorKind::kIncompatibleLabels, "target outside the root's subtree");
    return *s.parent;
  }
  for (const auto& [ancestor, child] : t.exits) {
    if (ancestor == s.self) return child;
  }
  if (!s.heavy_child) throw Error(ErrorKind::kIncompatibleLabels, "leaf has no child towards target");
  return *s.heavy_child;
}

void encode(BitWriter& out, const TreeLabel& label, const BitLayout& layout) {
  out.write(label.self, layout.id);
  out.write(label.low, layout.id);
  out.write(label.post, layout.id);
  out.write_bit(label.parent.has_value());
  if (label.parent) out.write(*label.parent, layout.id);
  out.write_bit(label.heavy_child.has_value());
  if (label.heavy_child) out.write(*label.heavy_child, layout.id);
  out.write(label.exits.size(), layout.exits);
  for (const auto& [a, c] : label.exits) {
    out.write(a, layout.id);
    out.write(c, layout.id);
  }
}

TreeLabel decode_tree_label(BitReader& in, const BitLayout& layout) {
  TreeLabel lab;
  lab.self = static_cast<VertexId>(in.read(layout.id));
  lab.low = static_cast<std::uint32_t>(in.read(layout.id));
  lab.post = static_cast<std::uint32_t>(in.read(layout.id));
  if (in.read_bit()) lab.parent = static_cast<VertexId>(in.read(layout.id));
  if (in.read_bit()) lab.heavy_child = static_cast<VertexId>(in.read(layout.id));
  const auto count = in.read(layout.exits);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto a = static_cast<VertexId>(in.read(layout.id));
    const auto c = static_cast<VertexId>(in.read(layout.id));
    lab.exits.emplace_back(a, c);
  }
  return lab;
}

}  // namespace udgroute

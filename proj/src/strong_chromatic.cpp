#include "strongcolor/strong_chromatic.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "strongcolor/chordal.hpp"
#include "strongcolor/errors.hpp"

namespace strongcolor {

namespace {

std::uint64_t max_edge_degree_sum(const Graph& t) {
  std::uint64_t best = 0;
  for (const Edge& e : t.edges()) {
    best = std::max<std::uint64_t>(best, t.degree(e.u) + t.degree(e.v) - 1);
  }
  return best;
}

// Same value from a leaf shape; degree is scratch.
std::uint64_t max_edge_degree_sum(std::span<const std::uint32_t> parent, std::vector<std::uint32_t>& degree) {
  const std::size_t n = parent.size();
  degree.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    ++degree[i];
    ++degree[parent[i]];
  }
  std::uint64_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    best = std::max<std::uint64_t>(best, std::uint64_t{degree[i]} + degree[parent[i]] - 1);
  }
  return best;
}

}  // namespace

std::uint64_t sci_tree(const Graph& t) {
  if (!is_tree(t)) throw InputError("sci_tree expects a tree");
  return max_edge_degree_sum(t);
}

std::uint64_t sci_cotree(std::uint64_t n) {
  if (n == 0) throw InputError("sci_cotree expects at least one vertex");
  return n * (n - 1) / 2 - (n - 1);
}

SChiResult sci(const DecompositionTree& t) {
  SChiResult result;
  result.per_node.resize(t.size());
  auto& value = result.per_node;
  std::vector<std::uint32_t> degree;
  const auto plan = t.fold_plan();
  for (std::size_t id = 0; id < plan.size(); ++id) {
    const FoldStep& step = plan[id];
    switch (step.kind) {
      case NodeKind::tree_leaf:
        value[id] = max_edge_degree_sum(t.leaf_shape(step), degree);
        break;
      case NodeKind::cotree_leaf:
        value[id] = sci_cotree(step.n);
        break;
      case NodeKind::disjoint_union:
        value[id] = std::max(value[step.a], value[step.b]);
        break;
      case NodeKind::join:
        value[id] = plan[step.a].n * plan[step.b].n + value[step.a] + value[step.b];
        break;
    }
  }
  result.value = value[t.root()];
  return result;
}

StrongEdgeColoring strong_coloring_tree(const Graph& t) {
  if (!is_tree(t)) throw InputError("strong_coloring_tree expects a tree");
  const SquaredLinegraph square(t);
  auto peo = perfect_elimination_ordering(square.graph());
  if (!peo) {
    throw InvariantViolation("reverse Lex-BFS on L(T)^2 is not a perfect elimination ordering for a tree with " +
                             std::to_string(t.vertex_count()) + " vertices");
  }
  std::reverse(peo->begin(), peo->end());
  StrongEdgeColoring coloring(greedy_coloring(square.graph(), *peo));
  if (coloring.palette_size() != max_edge_degree_sum(t)) {
    throw InvariantViolation("tree coloring used " + std::to_string(coloring.palette_size()) +
                             " colors, expected " + std::to_string(max_edge_degree_sum(t)));
  }
  return coloring;
}

StrongEdgeColoring strong_coloring(const DecompositionTree& t) {
  const SChiResult index = sci(t);
  const std::vector<std::uint64_t> first_edge = edge_offsets(t);
  std::vector<std::uint64_t> shift(t.size(), 0);
  for (NodeId id = t.size(); id-- > 0;) {
    const DecompNode& node = t.node(id);
    if (node.is_leaf()) continue;
    shift[node.left] = shift[id];
    shift[node.right] = node.kind == NodeKind::join ? shift[id] + index.per_node[node.left] : shift[id];
  }

  std::vector<Color> colors(t.edge_count());
  for (NodeId id = 0; id < t.size(); ++id) {
    const DecompNode& node = t.node(id);
    std::uint64_t slot = first_edge[id];
    switch (node.kind) {
      case NodeKind::tree_leaf: {
        const StrongEdgeColoring leaf = strong_coloring_tree(t.leaf_tree(id));
        for (Color c : leaf.colors()) colors[slot++] = shift[id] + c;
        break;
      }
      case NodeKind::cotree_leaf:
        for (std::uint64_t k = 0; k < node.summary.m; ++k) colors[slot++] = shift[id] + k;
        break;
      case NodeKind::join: {
        const DecompNode& a = t.node(node.left);
        const DecompNode& b = t.node(node.right);
        slot += a.summary.m + b.summary.m;
        const std::uint64_t fresh = shift[id] + index.per_node[node.left] + index.per_node[node.right];
        for (std::uint64_t k = 0; k < a.summary.n * b.summary.n; ++k) colors[slot++] = fresh + k;
        break;
      }
      case NodeKind::disjoint_union:
        break;
    }
  }
  return StrongEdgeColoring(std::move(colors));
}

}  // namespace strongcolor

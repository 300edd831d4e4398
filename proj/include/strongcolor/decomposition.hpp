#pragma once

// Decomposition trees of tree-cographs.
//
// Internal nodes are binary joins or disjoint unions; leaves are trees or
// complements of trees. A complement leaf stores only the underlying tree.
// Nodes live in one array in post-order (children before parents), so every
// bottom-up fold is a forward loop over nodes() and the last node is the
// root.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strongcolor/graph.hpp"

namespace strongcolor {

using NodeId = std::size_t;

enum class NodeKind : std::uint8_t { join, disjoint_union, tree_leaf, cotree_leaf };

struct NodeSummary {
  std::uint64_t n = 0;              // vertices of the represented graph
  std::uint64_t m = 0;              // edges of the represented graph
  std::uint64_t global_offset = 0;  // first global vertex id in this subtree
};

struct DecompNode {
  NodeKind kind = NodeKind::tree_leaf;
  NodeId left = 0;   // internal nodes only
  NodeId right = 0;  // internal nodes only
  std::size_t leaf = 0;  // index into leaf graphs, leaves only
  NodeSummary summary;

  bool is_leaf() const { return kind == NodeKind::tree_leaf || kind == NodeKind::cotree_leaf; }
};

/// Packed copy of a node for the value-only folds. For internal nodes a and
/// b are the children; for leaves a is the start of the leaf shape.
struct FoldStep {
  std::uint64_t n = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  NodeKind kind = NodeKind::tree_leaf;
};

class DecompositionTree {
 public:
  class Builder;

  NodeId root() const { return nodes_.size() - 1; }
  std::size_t size() const { return nodes_.size(); }
  std::span<const DecompNode> nodes() const { return nodes_; }
  const DecompNode& node(NodeId id) const { return nodes_[id]; }

  /// The underlying tree of a leaf (for a complement leaf, the tree whose
  /// complement the leaf represents).
  const Graph& leaf_tree(NodeId id) const { return leaves_[nodes_[id].leaf]; }

  /// Compact form of a leaf's tree for the value-only folds: vertices in BFS
  /// order from vertex 0, entry i holding the BFS position of the parent of
  /// the i-th vertex (entry 0 is 0). Parents precede children.
  std::span<const std::uint32_t> leaf_shape(NodeId id) const {
    return {shapes_.data() + shape_start_[nodes_[id].leaf], static_cast<std::size_t>(nodes_[id].summary.n)};
  }

  /// One step per node, same order as nodes().
  std::span<const FoldStep> fold_plan() const { return plan_; }
  std::span<const std::uint32_t> leaf_shape(const FoldStep& step) const {
    return {shapes_.data() + step.a, static_cast<std::size_t>(step.n)};
  }

  std::uint64_t vertex_count() const { return nodes_.back().summary.n; }
  std::uint64_t edge_count() const { return nodes_.back().summary.m; }

 private:
  DecompositionTree() = default;

  std::vector<DecompNode> nodes_;
  std::vector<Graph> leaves_;
  std::vector<std::uint32_t> shapes_;     // all leaf shapes, in node order
  std::vector<std::size_t> shape_start_;  // per leaf index
  std::vector<FoldStep> plan_;
};

/// Assembles a decomposition tree bottom-up. Every node except the last one
/// added must be used exactly once as a child; the last node is the root.
/// build() renumbers nodes in post-order (left subtree, right subtree,
/// node), so ids returned while building do not survive it.
class DecompositionTree::Builder {
 public:
  /// Throws InputError if `t` is not a tree.
  NodeId tree_leaf(Graph t);
  NodeId cotree_leaf(Graph t);
  NodeId join(NodeId left, NodeId right);
  NodeId disjoint_union(NodeId left, NodeId right);

  std::size_t size() const { return tree_.nodes_.size(); }

  DecompositionTree build() &&;

 private:
  NodeId leaf(NodeKind kind, Graph t);
  NodeId internal(NodeKind kind, NodeId left, NodeId right);

  DecompositionTree tree_;
  std::vector<char> used_;
};

/// Parses the JSON document format:
///   leaf:     {"type":"tree"|"cotree","n":<int>,"edges":[[u,v],...]}
///   internal: {"type":"join"|"union","children":[<node>,<node>,...]}
/// More than two children are folded into a left-leaning binary chain.
/// Throws InputError with the byte position for malformed JSON and with the
/// node path (e.g. `root.children[1]`) for invalid content.
DecompositionTree parse_decomposition(std::string_view text);

/// Canonical compact serialization: binary children arrays, keys in the
/// order shown above, leaf edges in stored order.
std::string serialize_decomposition(const DecompositionTree& t);

/// Materializes the represented graph. Vertex ids are global DFS offsets.
/// Edge order is fixed recursively: left subtree edges, right subtree edges,
/// then for a join the cross edges (u,v) with u ascending over the left
/// range and v ascending over the right range. A tree leaf keeps the order
/// of its tree; a complement leaf lists its edges lexicographically.
Graph realize(const DecompositionTree& t);

/// Position of each node's first edge in the realize() edge order.
std::vector<std::uint64_t> edge_offsets(const DecompositionTree& t);

/// Random decomposition tree, deterministic per seed. Every node at depth
/// below max_depth is internal with probability 3/4; leaves have 1 to
/// max_leaf_size vertices, a uniform random labeled tree, and are tree or
/// complement leaves with equal probability.
DecompositionTree random_tree_cograph(std::uint64_t seed, int max_depth, int max_leaf_size);

/// Random decomposition tree representing a graph on exactly
/// `vertex_count` vertices, built from leaves of at most max_leaf_size
/// vertices merged in random order. Used for scaling runs.
DecompositionTree random_tree_cograph_with_size(std::uint64_t seed, std::uint64_t vertex_count,
                                                int max_leaf_size);

}  // namespace strongcolor

#pragma once

#include <cstdint>
#include <vector>

#include "strongcolor/decomposition.hpp"
#include "strongcolor/graph.hpp"

namespace strongcolor {

struct SChiResult {
  std::uint64_t value = 0;
  std::vector<std::uint64_t> per_node;  // indexed by NodeId
};

/// Strong chromatic index of a tree: the largest d(x) + d(y) - 1 over its
/// edges, 0 for K1. Throws InputError if t is not a tree.
std::uint64_t sci_tree(const Graph& t);

/// Strong chromatic index of the complement of a tree on n >= 1 vertices.
/// Every nonedge of the tree conflicts with every other one, so this is the
/// nonedge count C(n,2) - (n-1).
std::uint64_t sci_cotree(std::uint64_t n);

/// Bottom-up evaluation over the decomposition: union takes the larger
/// child value, join adds both child values and the n_left * n_right cross
/// edges. Linear in the total leaf size plus the node count.
SChiResult sci(const DecompositionTree& t);

/// Optimal strong edge coloring of a tree: first-fit along Lex-BFS on
/// L(t)^2, which is chordal. Throws InvariantViolation if the reverse
/// Lex-BFS order is not a perfect elimination ordering or the palette
/// differs from sci_tree(t).
StrongEdgeColoring strong_coloring_tree(const Graph& t);

/// Optimal strong edge coloring of realize(t), indexed by realize()'s edge
/// order and using exactly sci(t).value colors.
///
/// Palette layout before canonical relabeling: union children share the
/// palette of their parent; a join gives its left child the parent's range,
/// shifts the right child past it, and puts the cross edges after both.
StrongEdgeColoring strong_coloring(const DecompositionTree& t);

}  // namespace strongcolor

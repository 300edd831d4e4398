#pragma once

#include <cstdint>
#include <vector>

#include "strongcolor/decomposition.hpp"
#include "strongcolor/graph.hpp"

namespace strongcolor {

struct InducedMatchingResult {
  std::uint64_t value = 0;
  std::vector<Edge> witness;  // sorted; |witness| == value
};

/// Maximum induced matching of a tree with a witness over its local vertex
/// ids, by a rooted three-state dynamic program in O(n). Throws InputError
/// if t is not a tree.
InducedMatchingResult im_tree(const Graph& t);

/// Maximum induced matching of realize(t) with a witness over global vertex
/// ids. Union adds the child values; join keeps the best of the left child,
/// the right child and a single cross edge, preferring them in that order.
InducedMatchingResult im(const DecompositionTree& t);

/// Value-only variant of im(): no witness is built.
std::uint64_t im_value(const DecompositionTree& t);

}  // namespace strongcolor

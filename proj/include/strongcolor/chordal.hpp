#pragma once

#include <optional>
#include <span>
#include <vector>

#include "strongcolor/graph.hpp"

namespace strongcolor {

/// Lexicographic breadth-first search order, computed by partition
/// refinement in O(n + m). Starts from vertex 0; ties are broken by the
/// current position inside the refined partition, so the order is
/// deterministic.
std::vector<Vertex> lex_bfs_order(const Graph& g);

/// True iff `order` is a permutation of the vertices in which every vertex's
/// neighbors appearing later in the order form a clique.
bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order);

/// The reverse Lex-BFS order if it is a perfect elimination ordering, which
/// happens exactly when g is chordal; nullopt otherwise.
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g);

/// First-fit coloring along `order`. For a chordal graph colored along the
/// reverse of a perfect elimination ordering this uses omega(g) colors.
std::vector<Color> greedy_coloring(const Graph& g, std::span<const Vertex> order);

}  // namespace strongcolor

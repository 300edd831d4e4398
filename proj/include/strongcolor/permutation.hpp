#pragma once

// Strong edge coloring of permutation graphs through a trapezoid model of
// L(G)^2. Label k sits at position k on the top line and at position pi[k]
// on the bottom line.

#include <span>
#include <string_view>
#include <vector>

#include "strongcolor/graph.hpp"

namespace strongcolor {

class PermutationDiagram {
 public:
  /// Throws InputError unless pi is a bijection on 0..n-1.
  explicit PermutationDiagram(std::vector<std::size_t> pi);

  std::size_t size() const { return pi_.size(); }
  std::span<const std::size_t> pi() const { return pi_; }
  /// Bottom-line position of label k.
  std::size_t bottom(std::size_t k) const { return pi_[k]; }

 private:
  std::vector<std::size_t> pi_;
};

/// Whitespace-separated permutation of 0..n-1, listed in label order.
PermutationDiagram parse_permutation(std::string_view text);

struct Trapezoid {
  std::size_t top_lo = 0;
  std::size_t top_hi = 0;
  std::size_t bot_lo = 0;
  std::size_t bot_hi = 0;
  EdgeIndex edge_index = 0;

  friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

/// Disjoint iff one trapezoid lies strictly left of the other on both lines.
bool intersects(const Trapezoid& a, const Trapezoid& b);

/// Labels i and j are adjacent iff their segments cross. Edges are (i,j),
/// i < j, in lexicographic order.
Graph permutation_graph(const PermutationDiagram& d);

/// One trapezoid per edge {i,j}: the top interval spans i..j and the bottom
/// interval spans pi[i]..pi[j]. Throws InputError if g is not the
/// permutation graph of d.
std::vector<Trapezoid> trapezoid_model(const PermutationDiagram& d, const Graph& g);

/// Color classes are chains of trapezoids, each strictly left of the next on
/// both lines. Sweeps in order of (top_lo, bot_lo, edge_index); a trapezoid
/// joins the class whose last member has already ended on the top line and
/// has the largest bottom corner left of it, or opens a new class. Uses the
/// minimum number of colors. O(k log k). The edge indices must be exactly
/// 0..k-1.
StrongEdgeColoring greedy_trapezoid_coloring(std::span<const Trapezoid> trapezoids);

/// Same sweep order, smallest color whose class lies entirely to the left.
/// Not always optimal: pi = 1 2 4 0 6 5 3 gets 5 colors where 4 suffice.
StrongEdgeColoring first_fit_trapezoid_coloring(std::span<const Trapezoid> trapezoids);

using TrapezoidColoring = StrongEdgeColoring (*)(std::span<const Trapezoid>);

/// permutation_graph, then trapezoid_model, then `backend`. The result is
/// indexed by the edges of permutation_graph(d).
StrongEdgeColoring strong_color_permutation(const PermutationDiagram& d,
                                            TrapezoidColoring backend = greedy_trapezoid_coloring);

}  // namespace strongcolor

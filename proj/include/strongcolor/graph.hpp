#pragma once

// Undirected simple graphs with stable edge indices, linegraph squares and
// strong edge coloring certificates.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace strongcolor {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;
using Color = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Edges keep the index they were given at construction. Adjacency is stored
/// in compressed rows sorted by neighbor, with the index of the connecting
/// edge alongside each neighbor.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }

  /// Neighbors of `v` in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  /// Edge indices incident to `v`, aligned with neighbors(v).
  std::span<const EdgeIndex> incident_edges(Vertex v) const {
    return {incident_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const;

  /// Same vertex count and identical edge list, order included.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t, std::vector<Edge>);

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<EdgeIndex> incident_;
};

/// Builds a graph whose edge i is edges[i]. Throws InputError on a
/// self-loop, an endpoint outside 0..n-1, or a repeated edge.
Graph build_graph(std::size_t n, std::vector<Edge> edges);

/// {u,v} is an edge of the result iff u != v and {u,v} is not an edge of g.
/// Result edges are listed as (u,v), u < v, in lexicographic order.
Graph complement(const Graph& g);

/// Connected with exactly n-1 edges. The empty graph is not a tree.
bool is_tree(const Graph& g);

bool is_connected(const Graph& g);

/// Equal vertex counts and equal edge sets, ignoring order and orientation.
bool same_edge_set(const Graph& a, const Graph& b);

/// L(G)^2 as a graph over the edge indices of its base graph: two edge
/// indices are adjacent iff the base edges share an endpoint or some base
/// edge joins an endpoint of one to an endpoint of the other.
class SquaredLinegraph {
 public:
  explicit SquaredLinegraph(Graph base);

  const Graph& graph() const { return square_; }
  const Graph& base() const { return base_; }

 private:
  Graph base_;
  Graph square_;
};

SquaredLinegraph square_of_linegraph(const Graph& g);

/// Edge coloring in canonical form: colors are relabeled to 0..k-1 in order
/// of first use along the edge indices.
class StrongEdgeColoring {
 public:
  StrongEdgeColoring() = default;
  explicit StrongEdgeColoring(std::vector<Color> colors);

  std::span<const Color> colors() const { return colors_; }
  Color color(EdgeIndex e) const { return colors_[e]; }
  std::size_t size() const { return colors_.size(); }
  std::size_t palette_size() const { return palette_size_; }

  friend bool operator==(const StrongEdgeColoring&, const StrongEdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
  std::size_t palette_size_ = 0;
};

/// True iff no two edges that share an endpoint or are joined by an edge
/// carry the same color. Throws InputError if the coloring does not have
/// one color per edge.
///
/// Runs in O(sum of squared degrees) without materializing L(G)^2: the
/// coloring must be proper at every vertex, and for every edge {a,b} the only
/// color seen both at a and at b must be the color of {a,b} itself.
bool is_strong_edge_coloring(const Graph& g, const StrongEdgeColoring& coloring);

/// True iff every listed pair is an edge of g, the edges are pairwise
/// vertex-disjoint, and no edge of g joins endpoints of two listed edges.
bool is_induced_matching(const Graph& g, std::span<const Edge> matching);

/// Text format: a header line `n m`, then m lines `u v` (0-based). Blank
/// lines and `#` comments are ignored.
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

}  // namespace strongcolor

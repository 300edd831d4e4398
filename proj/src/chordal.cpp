#include "strongcolor/chordal.hpp"

#include <algorithm>

namespace strongcolor {

namespace {

// A cell of the refined partition is the contiguous slice
// [start, start + size) of the Lex-BFS sequence.
struct Cell {
  std::size_t start = 0;
  std::size_t size = 0;
  std::size_t moved = 0;
};

}  // namespace

std::vector<Vertex> lex_bfs_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> sequence(n);
  std::vector<std::size_t> position(n);
  for (Vertex v = 0; v < n; ++v) sequence[v] = position[v] = v;

  std::vector<Cell> cells;
  cells.reserve(n + 1);
  std::vector<std::size_t> cell_of(n, 0);
  if (n > 0) cells.push_back({0, n, 0});

  std::vector<char> numbered(n, 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex pivot = sequence[i];
    numbered[pivot] = 1;
    Cell& own = cells[cell_of[pivot]];
    ++own.start;
    --own.size;

    touched.clear();
    for (Vertex w : g.neighbors(pivot)) {
      if (numbered[w]) continue;
      const std::size_t c = cell_of[w];
      Cell& cell = cells[c];
      if (cell.moved == 0) touched.push_back(c);
      const std::size_t target = cell.start + cell.moved;
      const Vertex displaced = sequence[target];
      std::swap(sequence[target], sequence[position[w]]);
      position[displaced] = position[w];
      position[w] = target;
      ++cell.moved;
    }
    for (std::size_t c : touched) {
      Cell& cell = cells[c];
      const std::size_t moved = cell.moved;
      cell.moved = 0;
      if (moved == cell.size) continue;
      const std::size_t fresh = cells.size();
      cells.push_back({cell.start, moved, 0});
      cells[c].start += moved;
      cells[c].size -= moved;
      for (std::size_t p = cells[fresh].start; p < cells[fresh].start + moved; ++p) {
        cell_of[sequence[p]] = fresh;
      }
    }
  }
  return sequence;
}

bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) return false;
  std::vector<std::size_t> rank(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || rank[order[i]] != n) return false;
    rank[order[i]] = i;
  }
  // Each vertex's earliest later neighbor must see all its other later
  // neighbors; this suffices by induction along the order.
  for (Vertex v : order) {
    Vertex parent = n;
    for (Vertex w : g.neighbors(v)) {
      if (rank[w] > rank[v] && (parent == n || rank[w] < rank[parent])) parent = w;
    }
    if (parent == n) continue;
    for (Vertex w : g.neighbors(v)) {
      if (rank[w] > rank[v] && w != parent && !g.has_edge(parent, w)) return false;
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g) {
  std::vector<Vertex> order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());
  if (!is_perfect_elimination_ordering(g, order)) return std::nullopt;
  return order;
}

std::vector<Color> greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  constexpr Color none = static_cast<Color>(-1);
  std::vector<Color> color(n, none);
  std::vector<std::size_t> blocked(n + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    for (Vertex w : g.neighbors(v)) {
      if (color[w] != none) blocked[color[w]] = i + 1;
    }
    Color c = 0;
    while (blocked[c] == i + 1) ++c;
    color[v] = c;
  }
  return color;
}

}  // namespace strongcolor

#pragma once

// Test-only graph builders and exhaustive oracles. Nothing here calls into
// the code paths it checks: linegraph distances come from an explicit BFS,
// and the exact solvers enumerate assignments or subsets directly.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "strongcolor/graph.hpp"
#include "strongcolor/random.hpp"

namespace strongcolor::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return build_graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return build_graph(n, edges);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return build_graph(leaves + 1, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph(n, edges);
}

/// P4 0-1-2-3 plus hub 4 adjacent to all of it.
inline Graph gem_graph() {
  return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

inline Graph random_graph(Rng& rng, std::size_t n, std::uint64_t numerator, std::uint64_t denominator) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(numerator, denominator)) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges);
}

/// Linegraph distance between every pair of edges, by BFS over the explicit
/// linegraph (edges adjacent iff they share an endpoint).
inline std::vector<std::vector<std::size_t>> linegraph_distances(const Graph& g) {
  const std::size_t m = g.edge_count();
  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<EdgeIndex>> adjacent(m);
  for (EdgeIndex a = 0; a < m; ++a) {
    for (EdgeIndex b = 0; b < m; ++b) {
      const Edge& x = g.edge(a);
      const Edge& y = g.edge(b);
      if (a != b && (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v)) adjacent[a].push_back(b);
    }
  }
  std::vector<std::vector<std::size_t>> dist(m, std::vector<std::size_t>(m, kFar));
  for (EdgeIndex s = 0; s < m; ++s) {
    std::queue<EdgeIndex> queue;
    dist[s][s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const EdgeIndex a = queue.front();
      queue.pop();
      for (EdgeIndex b : adjacent[a]) {
        if (dist[s][b] == kFar) {
          dist[s][b] = dist[s][a] + 1;
          queue.push(b);
        }
      }
    }
  }
  return dist;
}

/// Adjacency matrix of L(G)^2 from the BFS distances.
inline std::vector<std::vector<bool>> brute_square_matrix(const Graph& g) {
  const auto dist = linegraph_distances(g);
  const std::size_t m = g.edge_count();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (EdgeIndex a = 0; a < m; ++a) {
    for (EdgeIndex b = 0; b < m; ++b) adj[a][b] = a != b && dist[a][b] <= 2;
  }
  return adj;
}

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

/// Chromatic number by trying every assignment with k = 0, 1, ... colors.
inline std::size_t enumerate_chromatic_number(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> color(n, 0);
    while (true) {
      bool proper = true;
      for (std::size_t a = 0; a < n && proper; ++a) {
        for (std::size_t b = a + 1; b < n && proper; ++b) proper = !(adj[a][b] && color[a] == color[b]);
      }
      if (proper) return k;
      std::size_t i = 0;
      while (i < n && ++color[i] == k) color[i++] = 0;
      if (i == n) break;
    }
  }
}

/// Largest vertex subset that is pairwise adjacent (want_edges) or pairwise
/// nonadjacent (!want_edges), by enumerating all subsets.
inline std::size_t enumerate_largest_uniform_subset(const std::vector<std::vector<bool>>& adj, bool want_edges) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = a + 1; b < n && ok; ++b) {
        if ((mask >> b & 1) && adj[a][b] != want_edges) ok = false;
      }
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

/// Largest induced matching of g by enumerating edge subsets. m <= ~20.
inline std::size_t enumerate_induced_matching(const Graph& g) {
  const auto adj = adjacency_matrix(g);
  const std::size_t m = g.edge_count();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool ok = true;
    for (EdgeIndex a = 0; a < m && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (EdgeIndex b = a + 1; b < m && ok; ++b) {
        if (!(mask >> b & 1)) continue;
        const Edge& x = g.edge(a);
        const Edge& y = g.edge(b);
        for (Vertex p : {x.u, x.v}) {
          for (Vertex q : {y.u, y.v}) {
            if (p == q || adj[p][q]) ok = false;
          }
        }
      }
    }
    if (ok) best = size;
  }
  return best;
}

/// True iff some vertex subset of size >= k induces a cycle. n <= ~12.
inline bool enumerate_induced_cycle_at_least(const Graph& g, std::size_t k) {
  const auto adj = adjacency_matrix(g);
  const std::size_t n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size < k || size < 3) continue;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) members.push_back(v);
    }
    bool two_regular = true;
    for (Vertex v : members) {
      std::size_t d = 0;
      for (Vertex w : members) d += adj[v][w];
      two_regular = two_regular && d == 2;
    }
    if (!two_regular) continue;
    // Two-regular and connected means a single cycle.
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{members[0]};
    seen[members[0]] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : members) {
        if (adj[v][w] && !seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached == size) return true;
  }
  return false;
}

/// Induced gem by checking every 5-subset: 7 edges with degree sequence
/// 4,3,3,2,2 determines the gem up to isomorphism.
inline bool enumerate_gem(const Graph& g) {
  const auto adj = adjacency_matrix(g);
  const std::size_t n = g.vertex_count();
  if (n < 5) return false;
  std::vector<Vertex> pick(5);
  for (pick[0] = 0; pick[0] < n; ++pick[0])
    for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
      for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
        for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
          for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4]) {
            std::vector<std::size_t> degrees;
            std::size_t edges = 0;
            for (Vertex a : pick) {
              std::size_t d = 0;
              for (Vertex b : pick) d += adj[a][b];
              degrees.push_back(d);
              edges += d;
            }
            std::sort(degrees.begin(), degrees.end());
            if (edges == 14 && degrees == std::vector<std::size_t>{2, 2, 3, 3, 4}) return true;
          }
  return false;
}

inline std::string tree_leaf_json(const Graph& t, const char* type = "tree") {
  std::string out = std::string("{\"type\":\"") + type + "\",\"n\":" + std::to_string(t.vertex_count()) +
                    ",\"edges\":[";
  for (EdgeIndex e = 0; e < t.edge_count(); ++e) {
    if (e) out += ',';
    out += "[" + std::to_string(t.edge(e).u) + "," + std::to_string(t.edge(e).v) + "]";
  }
  return out + "]}";
}

inline std::string internal_json(const char* type, const std::string& left, const std::string& right) {
  return std::string("{\"type\":\"") + type + "\",\"children\":[" + left + "," + right + "]}";
}

}  // namespace strongcolor::testing

#include "strongcolor/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include "strongcolor/errors.hpp"

namespace strongcolor {

namespace {

std::string describe(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Edge normalized(Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  return e;
}

}  // namespace

std::optional<EdgeIndex> Graph::find_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto row = neighbors(a);
  auto it = std::lower_bound(row.begin(), row.end(), b);
  if (it == row.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - row.begin())];
}

Graph build_graph(std::size_t n, std::vector<Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= n || e.v >= n) {
      throw InputError("edge " + std::to_string(i) + " " + describe(e) +
                       " has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) {
      throw InputError("edge " + std::to_string(i) + " " + describe(e) + " is a self-loop");
    }
  }

  Graph g;
  g.vertex_count_ = n;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  std::vector<std::pair<Vertex, EdgeIndex>> rows(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeIndex i = 0; i < edges.size(); ++i) {
    rows[fill[edges[i].u]++] = {edges[i].v, i};
    rows[fill[edges[i].v]++] = {edges[i].u, i};
  }

  g.neighbors_.resize(rows.size());
  g.incident_.resize(rows.size());
  for (Vertex v = 0; v < n; ++v) {
    auto first = rows.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = rows.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    for (auto it = first; it != last; ++it) {
      if (it != first && it->first == (it - 1)->first) {
        throw InputError("duplicate edge " + describe(normalized({v, it->first})) +
                         " at indices " + std::to_string((it - 1)->second) + " and " +
                         std::to_string(it->second));
      }
      const auto slot = static_cast<std::size_t>(it - rows.begin());
      g.neighbors_[slot] = it->first;
      g.incident_[slot] = it->second;
    }
  }
  g.edges_ = std::move(edges);
  return g;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  if (n >= 2) edges.reserve(n * (n - 1) / 2 - std::min(g.edge_count(), n * (n - 1) / 2));
  for (Vertex u = 0; u < n; ++u) {
    auto row = g.neighbors(u);
    auto it = std::upper_bound(row.begin(), row.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != row.end() && *it == v) {
        ++it;
        continue;
      }
      edges.push_back({u, v});
    }
  }
  return build_graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool same_edge_set(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (const Edge& e : a.edges()) {
    if (!b.has_edge(e.u, e.v)) return false;
  }
  return true;
}

SquaredLinegraph::SquaredLinegraph(Graph base) : base_(std::move(base)) {
  const std::size_t m = base_.edge_count();
  std::vector<std::size_t> stamp(m, 0);
  std::vector<Edge> pairs;
  for (EdgeIndex e = 0; e < m; ++e) {
    const Edge& uv = base_.edge(e);
    for (Vertex endpoint : {uv.u, uv.v}) {
      for (Vertex w : base_.neighbors(endpoint)) {
        for (EdgeIndex f : base_.incident_edges(w)) {
          if (f > e && stamp[f] != e + 1) {
            stamp[f] = e + 1;
            pairs.push_back({e, f});
          }
        }
      }
    }
  }
  square_ = build_graph(m, std::move(pairs));
}

SquaredLinegraph square_of_linegraph(const Graph& g) { return SquaredLinegraph(g); }

StrongEdgeColoring::StrongEdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {
  if (colors_.empty()) return;
  const Color max_color = *std::max_element(colors_.begin(), colors_.end());
  constexpr Color unassigned = static_cast<Color>(-1);
  if (max_color < 4 * colors_.size() + 16) {
    std::vector<Color> relabel(max_color + 1, unassigned);
    for (Color& c : colors_) {
      if (relabel[c] == unassigned) relabel[c] = palette_size_++;
      c = relabel[c];
    }
  } else {
    std::unordered_map<Color, Color> relabel;
    for (Color& c : colors_) {
      auto [it, inserted] = relabel.try_emplace(c, palette_size_);
      if (inserted) ++palette_size_;
      c = it->second;
    }
  }
}

bool is_strong_edge_coloring(const Graph& g, const StrongEdgeColoring& coloring) {
  if (coloring.size() != g.edge_count()) {
    throw InputError("coloring has " + std::to_string(coloring.size()) + " entries for " +
                     std::to_string(g.edge_count()) + " edges");
  }
  // seen_at[c] == v + 1 while scanning vertex v means color c is incident to v.
  std::vector<std::size_t> seen_at(coloring.palette_size(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (EdgeIndex e : g.incident_edges(v)) {
      Color c = coloring.color(e);
      if (seen_at[c] == v + 1) return false;
      seen_at[c] = v + 1;
    }
  }
  std::vector<std::size_t> mark(coloring.palette_size(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ab = g.edge(e);
    for (EdgeIndex f : g.incident_edges(ab.u)) mark[coloring.color(f)] = e + 1;
    for (EdgeIndex f : g.incident_edges(ab.v)) {
      if (f != e && mark[coloring.color(f)] == e + 1) return false;
    }
  }
  return true;
}

bool is_induced_matching(const Graph& g, std::span<const Edge> matching) {
  for (const Edge& e : matching) {
    if (!g.has_edge(e.u, e.v)) return false;
  }
  for (std::size_t i = 0; i < matching.size(); ++i) {
    for (std::size_t j = i + 1; j < matching.size(); ++j) {
      for (Vertex a : {matching[i].u, matching[i].v}) {
        for (Vertex b : {matching[j].u, matching[j].v}) {
          if (a == b || g.has_edge(a, b)) return false;
        }
      }
    }
  }
  return true;
}

Graph read_graph_text(std::istream& in) {
  std::vector<std::size_t> numbers;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      std::size_t used = 0;
      unsigned long long value = 0;
      try {
        if (token.front() == '-') throw std::invalid_argument(token);
        value = std::stoull(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                         token + "'");
      }
      numbers.push_back(static_cast<std::size_t>(value));
    }
  }
  if (numbers.size() < 2) throw InputError("graph text is missing the `n m` header");
  const std::size_t n = numbers[0];
  const std::size_t m = numbers[1];
  if (numbers.size() != 2 + 2 * m) {
    throw InputError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string((numbers.size() - 2) / 2) + " endpoint pairs follow" +
                     ((numbers.size() % 2) ? " (plus a dangling endpoint)" : ""));
  }
  std::vector<Edge> edges(m);
  for (std::size_t i = 0; i < m; ++i) edges[i] = {numbers[2 + 2 * i], numbers[3 + 2 * i]};
  return build_graph(n, std::move(edges));
}

void write_graph_text(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace strongcolor

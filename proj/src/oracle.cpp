#include "strongcolor/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "strongcolor/chordal.hpp"
#include "strongcolor/errors.hpp"

namespace strongcolor {

namespace {

using Bitset = boost::dynamic_bitset<>;

std::vector<Bitset> adjacency_rows(const Graph& g) {
  std::vector<Bitset> rows(g.vertex_count(), Bitset(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    rows[e.u].set(e.v);
    rows[e.v].set(e.u);
  }
  return rows;
}

class NodeCounter {
 public:
  NodeCounter(SearchBudget budget, const char* what) : budget_(budget), what_(what) {}

  void tick() {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetExceeded(std::string(what_) + " exceeded its budget of " +
                           std::to_string(budget_.max_nodes) + " nodes");
    }
  }

 private:
  SearchBudget budget_;
  const char* what_;
  std::uint64_t nodes_ = 0;
};

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, SearchBudget budget)
      : adjacency_(adjacency_rows(g)), counter_(budget, "maximum clique search") {}

  std::vector<Vertex> run() {
    Bitset all(adjacency_.size());
    all.set();
    expand(all);
    return best_;
  }

 private:
  // Orders candidates into greedy color classes; bound[i] is the number of
  // classes used up to order[i], an upper bound on cliques among them.
  void color_sort(const Bitset& candidates, std::vector<Vertex>& order, std::vector<std::size_t>& bound) {
    Bitset uncolored = candidates;
    std::size_t classes = 0;
    while (uncolored.any()) {
      ++classes;
      Bitset open = uncolored;
      for (auto v = open.find_first(); v != Bitset::npos; v = open.find_next(v)) {
        open -= adjacency_[v];
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(classes);
      }
    }
  }

  void expand(Bitset candidates) {
    counter_.tick();
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    color_sort(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      Bitset next = candidates & adjacency_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<Bitset> adjacency_;
  NodeCounter counter_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, SearchBudget budget)
      : g_(g),
        n_(g.vertex_count()),
        color_(n_, kNone),
        pressure_(n_, std::vector<std::size_t>(n_ + 1, 0)),
        saturation_(n_, 0),
        counter_(budget, "chromatic number search") {}

  std::size_t run() {
    if (n_ == 0) return 0;
    const std::vector<Vertex> clique = CliqueSearch(g_, SearchBudget::unlimited()).run();
    lower_ = clique.size();
    best_ = greedy_upper_bound();
    if (best_ == lower_) return best_;
    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], i);
    search(clique.size(), clique.size());
    return best_;
  }

 private:
  static constexpr Color kNone = static_cast<Color>(-1);

  void assign(Vertex v, Color c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v)) {
      if (pressure_[w][c]++ == 0) ++saturation_[w];
    }
  }

  void unassign(Vertex v) {
    const Color c = color_[v];
    color_[v] = kNone;
    for (Vertex w : g_.neighbors(v)) {
      if (--pressure_[w][c] == 0) --saturation_[w];
    }
  }

  Vertex select() const {
    Vertex pick = n_;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != kNone) continue;
      if (pick == n_ || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick))) {
        pick = v;
      }
    }
    return pick;
  }

  std::size_t greedy_upper_bound() {
    std::size_t used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      const Vertex v = select();
      Color c = 0;
      while (pressure_[v][c] != 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    for (Vertex v = 0; v < n_; ++v) unassign(v);
    return used;
  }

  void search(std::size_t colored, std::size_t used) {
    counter_.tick();
    if (colored == n_) {
      best_ = used;
      return;
    }
    const Vertex v = select();
    for (Color c = 0; c < used; ++c) {
      if (pressure_[v][c] != 0) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v);
      if (best_ <= lower_) return;
    }
    if (used + 1 < best_) {
      assign(v, used);
      search(colored + 1, used + 1);
      unassign(v);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Color> color_;
  std::vector<std::vector<std::size_t>> pressure_;  // pressure_[v][c]: neighbors of v colored c
  std::vector<std::size_t> saturation_;
  NodeCounter counter_;
  std::size_t lower_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t exact_max_clique(const Graph& g, SearchBudget budget) {
  if (g.vertex_count() == 0) return 0;
  return CliqueSearch(g, budget).run().size();
}

std::size_t exact_max_independent_set(const Graph& g, SearchBudget budget) {
  return exact_max_clique(complement(g), budget);
}

std::size_t exact_chromatic_number(const Graph& g, SearchBudget budget) {
  return ColoringSearch(g, budget).run();
}

bool has_induced_cycle_at_least(const Graph& g, std::size_t k, SearchBudget budget) {
  if (k < 3) throw InputError("induced cycles have at least three vertices");
  const std::size_t n = g.vertex_count();
  const std::vector<Bitset> adjacent = adjacency_rows(g);
  NodeCounter counter(budget, "induced cycle search");
  std::vector<Vertex> path;
  Bitset on_path(n);

  // Extends the chordless path by neighbors of its last vertex that are
  // larger than path[0] and see no path vertex other than the last one,
  // except path[0] when they close the cycle.
  auto grow = [&](auto&& self) -> bool {
    counter.tick();
    const Vertex start = path.front();
    const Vertex last = path.back();
    for (Vertex x : g.neighbors(last)) {
      if (x <= start || on_path.test(x)) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (adjacent[x].test(path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path.size() >= 2 && adjacent[x].test(start)) {
        if (path.size() + 1 >= k) return true;
        continue;
      }
      path.push_back(x);
      on_path.set(x);
      const bool found = self(self);
      on_path.reset(x);
      path.pop_back();
      if (found) return true;
    }
    return false;
  };

  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path.set(s);
    const bool found = grow(grow);
    on_path.reset(s);
    if (found) return true;
  }
  return false;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

bool is_clique(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == (n == 0 ? 0 : n * (n - 1) / 2);
}

bool has_induced_gem(const Graph& g) {
  const std::vector<Bitset> adjacent = adjacency_rows(g);
  for (Vertex hub = 0; hub < g.vertex_count(); ++hub) {
    const Bitset& around = adjacent[hub];
    for (Vertex b : g.neighbors(hub)) {
      for (Vertex c : g.neighbors(b)) {
        if (!around.test(c)) continue;
        // Path a-b-c-d inside the hub's neighborhood.
        const Bitset ends_a = around & adjacent[b] & ~adjacent[c];
        const Bitset ends_d = around & adjacent[c] & ~adjacent[b];
        for (auto a = ends_a.find_first(); a != Bitset::npos; a = ends_a.find_next(a)) {
          if (a == c) continue;
          Bitset d_options = ends_d & ~adjacent[a];
          d_options.reset(a);
          d_options.reset(b);
          if (d_options.any()) return true;
        }
      }
    }
  }
  return false;
}

bool is_ptolemaic(const Graph& g) { return is_chordal(g) && !has_induced_gem(g); }

OracleReport make_report(std::string instance, std::string property, std::uint64_t fast_value,
                         std::uint64_t oracle_value, double elapsed_seconds) {
  OracleReport report;
  report.instance = std::move(instance);
  report.property = std::move(property);
  report.fast_value = fast_value;
  report.oracle_value = oracle_value;
  report.verdict = fast_value == oracle_value ? Verdict::agree : Verdict::disagree;
  report.elapsed_seconds = elapsed_seconds;
  return report;
}

}  // namespace strongcolor

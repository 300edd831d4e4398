#pragma once

// Exact brute-force ground truth for small instances. Every search counts
// the nodes it expands and throws BudgetExceeded once the budget runs out;
// an exhausted budget is an inconclusive answer, never a silent pass.

#include <cstdint>
#include <string>

#include "strongcolor/graph.hpp"

namespace strongcolor {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;

  static SearchBudget unlimited() { return {UINT64_MAX}; }
};

/// Minimum number of colors in a proper vertex coloring. DSATUR
/// branch-and-bound seeded with a maximum clique as lower bound and a DSATUR
/// greedy pass as upper bound.
std::size_t exact_chromatic_number(const Graph& g, SearchBudget budget = {});

/// Maximum clique size by branch-and-bound with greedy coloring bounds.
std::size_t exact_max_clique(const Graph& g, SearchBudget budget = {});

/// Maximum independent set size: maximum clique of the complement.
std::size_t exact_max_independent_set(const Graph& g, SearchBudget budget = {});

/// True iff g has an induced cycle on at least k vertices (k >= 3). Grows
/// chordless paths from each vertex as the smallest vertex of the cycle.
bool has_induced_cycle_at_least(const Graph& g, std::size_t k, SearchBudget budget = {});

/// Lex-BFS followed by perfect elimination ordering verification.
bool is_chordal(const Graph& g);

bool is_clique(const Graph& g);

/// Induced P4 a-b-c-d plus a vertex adjacent to all four, searched hub by
/// hub inside each neighborhood.
bool has_induced_gem(const Graph& g);

/// Chordal and gem-free.
bool is_ptolemaic(const Graph& g);

enum class Verdict { agree, disagree };

struct OracleReport {
  std::string instance;
  std::string property;
  std::uint64_t fast_value = 0;
  std::uint64_t oracle_value = 0;
  Verdict verdict = Verdict::agree;
  double elapsed_seconds = 0;
};

OracleReport make_report(std::string instance, std::string property, std::uint64_t fast_value,
                         std::uint64_t oracle_value, double elapsed_seconds);

}  // namespace strongcolor

#pragma once

#include <cstdint>
#include <optional>

#include "flexicolor/lists.hpp"

namespace flexicolor::oracle {

struct OracleResult {
  Weight optimum = 0;
  /// First optimal coloring in enumeration order; empty when g has no
  /// proper L-coloring.
  std::optional<Coloring> witness;
  std::int64_t colorings_enumerated = 0;
};

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

/// Exact maximum satisfied amount over every proper L-coloring. Vertices are
/// taken smallest-list-first (ties by id), colors ascending, and partial
/// colorings that leave a neighbour without colors are cut. Throws
/// BudgetExceeded when the product of list sizes is above `budget`.
OracleResult optimal_satisfaction(const Graph& g, const ListAssignment& lists, const Request& request,
                                  std::int64_t budget = kDefaultBudget);

/// True iff some proper L-coloring exists. Same budget rule.
bool is_degree_choosable_here(const Graph& g, const ListAssignment& lists, std::int64_t budget = kDefaultBudget);

/// Recomputes the bad-component test from scratch on a connected graph with
/// already pruned lists: every list has exactly the vertex degree and every
/// block is a clique or an odd cycle. Blocks are found by pairwise edge
/// separation tests rather than a DFS.
bool bruteforce_bad_component(const Graph& g, const ListAssignment& lists);

}  // namespace flexicolor::oracle

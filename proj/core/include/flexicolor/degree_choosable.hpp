#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flexicolor/lists.hpp"

namespace flexicolor {

struct DegreeChoosableOptions {
  /// Largest tight component whose blocks are all cliques or odd cycles
  /// that is searched exhaustively; bigger ones raise BudgetExceeded.
  int exhaustive_cap = 20;
  /// Search nodes allowed per component before BudgetExceeded.
  std::int64_t node_budget = 10'000'000;
};

/// True when every list is tight (|L(v)| == deg(v)) and every block of the
/// connected graph g is a clique or an odd cycle.
bool is_tight_gallai(const Graph& g, const ListAssignment& lists);

/// Proper L-coloring of g, which must satisfy |L(v)| >= deg(v) everywhere.
/// Components with a slack vertex are colored greedily by decreasing
/// distance from it; tight components are searched with fail-first
/// backtracking, which cannot fail when some block is neither a clique nor
/// an odd cycle. nullopt means some component admits no coloring.
std::optional<Coloring> degree_choosable_coloring(const Graph& g, const ListAssignment& lists,
                                                  const DegreeChoosableOptions& options = {});

/// Exhaustive fail-first search for any proper L-coloring (no list-size
/// precondition).
std::optional<Coloring> backtrack_list_coloring(const Graph& g, const ListAssignment& lists,
                                                std::int64_t node_budget);

struct ExtensionResult {
  std::optional<Coloring> coloring;
  /// Vertices of the component that could not be colored, when coloring is empty.
  std::vector<Vertex> infeasible_component;
};

/// Colors `fixed` as given, strikes those colors from neighbouring lists and
/// colors each remaining component with degree_choosable_coloring. Fixed
/// vertices must be distinct, pairwise non-adjacent and colored from their lists.
ExtensionResult precolor_and_extend(const Graph& g, const ListAssignment& lists,
                                    std::span<const std::pair<Vertex, Color>> fixed,
                                    const DegreeChoosableOptions& options = {});

}  // namespace flexicolor

#pragma once

#include <cstdint>

#include "flexicolor/lists.hpp"
#include "flexicolor/structure.hpp"

namespace flexicolor::treedepth {

/// Graph contained in the closure of a rooted forest of height at most k,
/// with lists of at least k colors.
struct TdInstance {
  Graph graph;
  TreedepthForest forest;
  int k = 0;
  ListAssignment lists;
};

/// Throws PreconditionError on a forest that does not fit the graph or a
/// list shorter than k (naming the vertex).
void validate(const TdInstance& inst);

/// Lists cut to exactly k colors: the requested color first, then the smallest.
ListAssignment trimmed_lists(const TdInstance& inst, const Request& request);

/// One coloring drawn from the recursive distribution: each subtree root
/// takes a uniform color from its list, that color leaves every list below
/// it, and any list that did not shrink loses its largest non-requested
/// color. The request must name at most one color per vertex.
Coloring sample_coloring(const TdInstance& inst, const Request& request, std::uint64_t seed);

/// Exact probability that v receives c under sample_coloring's distribution.
Rational exact_request_probability(const TdInstance& inst, const Request& request, Vertex v, Color c,
                                   std::int64_t node_budget = 10'000'000);

/// Expected satisfied weight under the distribution.
Rational expected_satisfied_weight(const TdInstance& inst, const Request& request,
                                   std::int64_t node_budget = 10'000'000);

/// Walks the forest top-down fixing each root to the color of largest
/// conditional expected satisfied weight (ties to the smallest color).
Coloring derandomized_coloring(const TdInstance& inst, const Request& request,
                               std::int64_t node_budget = 10'000'000);

}  // namespace flexicolor::treedepth

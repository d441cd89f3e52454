#pragma once

#include <vector>

#include "flexicolor/types.hpp"

namespace flexicolor::degeneracy {

/// Hypergraph on vertices 0..vertex_count-1. Edges may repeat and may be
/// singletons; vertices inside an edge are kept sorted and distinct.
struct Hypergraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> edges;

  Hypergraph() = default;
  Hypergraph(int n, std::vector<std::vector<int>> edge_list);
  int edge_count() const { return static_cast<int>(edges.size()); }
  int rank() const;
};

/// Every nonempty proper vertex subset is crossed by at least k edges.
/// Max-flow over the edge-split digraph, capped at k.
bool is_k_edge_connected(const Hypergraph& h, int k);

/// True when the edges in `chosen` connect every vertex.
bool spans_connected(const Hypergraph& h, const std::vector<int>& chosen);

/// eps(2) = 1/3, eps(d) = 3e / (d + 3e) with e = eps(ceil(d/3 + 1)).
Rational epsilon(int d);

/// Edge indices (sorted) of a connected spanning set with at most
/// (1 - epsilon(d)) |E| edges. Requires a 3-edge-connected hypergraph whose
/// edges have at most d vertices.
std::vector<int> hypergraph_spanning_set(const Hypergraph& h, int d);

}  // namespace flexicolor::degeneracy

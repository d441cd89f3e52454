#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flexicolor/coloring.hpp"
#include "flexicolor/graph.hpp"
#include "flexicolor/hypergraph.hpp"

namespace flexicolor::degeneracy {

/// Total order on V with a back-degree bound. `first` holds the vertices
/// that precede all of their neighbors (sorted).
struct DegeneracyOrdering {
  std::vector<Vertex> order;
  int bound = 0;
  std::vector<Vertex> first;
};

/// Checks that `order` is a permutation, back-degrees are within `bound`,
/// and `first` matches its definition. Returns a description on failure.
std::optional<std::string> check_ordering(const Graph& g, const DegeneracyOrdering& ordering);

/// Vertices whose neighbors all come later in `order`.
std::vector<Vertex> first_among_neighbors(const Graph& g, std::span<const Vertex> order);

/// Walks the spanning tree from w, covering V \ leaves first and the given
/// leaves last; prepending each vertex on first visit yields a
/// (maxdeg - 1)-degeneracy order in which every leaf precedes its neighbors.
DegeneracyOrdering ordering_from_tree(const Graph& g, std::span<const Edge> tree, std::span<const Vertex> leaves,
                                      Vertex w);

struct PipelineOptions {
  ColoringMode mode = ColoringMode::Greedy;
  /// Experimental: k > 0 picks requests pairwise at distance >= k + 2 and
  /// replaces the 3-connectivity precondition by a direct 3-edge-connectivity
  /// check of the component hypergraph.
  int boundary_k = 0;
};

struct PipelineTrace {
  Vertex low_vertex = -1;
  std::vector<Vertex> requests;     // R0 without the low vertex
  std::vector<Vertex> independent;  // pairwise-far subset of the requests
  std::vector<Vertex> spanning;     // requests whose hyperedges are kept
  std::vector<Vertex> leaves;       // requests made into tree leaves
  int hyper_vertices = 0;
  int hyper_edges = 0;
  int colors_used = 0;
  ColoringMode mode = ColoringMode::Greedy;
  Rational epsilon{0};
};

struct PipelineResult {
  DegeneracyOrdering ordering;
  int first_requested = 0;   // |F ∩ R0|
  Rational certified_fraction{0};
  Rational certified_amount{0};
  std::string derivation;
  PipelineTrace trace;
  bool bound_met() const { return Rational(first_requested) >= certified_amount; }
};

/// Ordering with bound maxdeg - 1 that puts a certified share of `requested`
/// before all their neighbors. Requires g 3-connected, not regular,
/// maxdeg >= 3, and `requested` not equal to the only low-degree vertex.
PipelineResult flexible_degeneracy_order(const Graph& g, std::span<const Vertex> requested,
                                         const PipelineOptions& options = {});

/// Component hypergraph: vertices are the components of g minus `removed`
/// (ordered by smallest vertex), one edge per removed vertex listing the
/// components it touches.
Hypergraph component_hypergraph(const Graph& g, std::span<const Vertex> removed);

struct GameConnectivity {
  Rational kappa{0};
  std::vector<Vertex> witness;
};

/// Exact game connectivity by brute force over vertex subsets, using the
/// removal-set formulation. Throws BudgetExceeded above `cap` vertices.
GameConnectivity exact_game_connectivity(const Graph& g, int cap = 16);

/// Same quantity from the leaf sets of all spanning trees. Throws
/// BudgetExceeded above `cap` vertices.
GameConnectivity game_connectivity_by_trees(const Graph& g, int cap = 8);

/// Largest share of R that can be leaves of one spanning tree.
Rational leaf_ratio(const Graph& g, std::span<const Vertex> r, int cap = 20);

}  // namespace flexicolor::degeneracy

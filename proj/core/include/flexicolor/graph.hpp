#pragma once

#include <span>
#include <vector>

#include "flexicolor/types.hpp"

namespace flexicolor {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws PreconditionError on loops, parallel edges or out-of-range ids.
  Graph(int vertex_count, std::span<const Edge> edges);

  int size() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  int max_degree() const noexcept { return max_degree_; }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < size(); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  int max_degree_ = 0;
};

struct InducedSubgraph {
  Graph graph;
  /// local id -> id in the parent graph
  std::vector<Vertex> to_parent;
};

/// Induced subgraph on `vertices`; local ids follow the order given.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components of g with `removed[v]` vertices deleted. Each
/// component is sorted; components are ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g, const std::vector<bool>& removed = {});

bool is_connected(const Graph& g);

/// BFS distances from `source` avoiding removed vertices; -1 when unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<bool>& removed = {});

/// g^p: u ~ v iff 1 <= dist(u, v) <= p.
Graph graph_power(const Graph& g, int power);

bool is_complete(const Graph& g);
bool is_cycle(const Graph& g);
bool is_regular(const Graph& g);
bool is_tree(const Graph& g);

/// True when g has more than k vertices and stays connected after deleting
/// any k - 1 vertices. Brute force over removal sets; intended for k <= 3.
bool is_k_connected(const Graph& g, int k);

bool is_independent(const Graph& g, std::span<const Vertex> vertices);

}  // namespace flexicolor

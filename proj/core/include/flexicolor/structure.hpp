#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flexicolor/graph.hpp"

namespace flexicolor {

/// Construction order of a k-tree: the first `width` vertices form a clique
/// and every later vertex has exactly `width` earlier neighbours, which form
/// a clique. Width 0 describes an edgeless graph.
struct KTreeOrder {
  int width = 0;
  std::vector<Vertex> sequence;
};

struct OrderViolation {
  std::size_t index = 0;  // position in the sequence
  Vertex vertex = -1;
  std::string reason;
};

/// nullopt when `order` is a valid k-tree construction of g.
std::optional<OrderViolation> validate_ktree_order(const Graph& g, const KTreeOrder& order);

/// Neighbours of each vertex that occur earlier in the sequence, indexed by vertex.
std::vector<std::vector<Vertex>> back_neighbors(const Graph& g, const KTreeOrder& order);

/// Rooted forest given by parent pointers (-1 for roots).
struct TreedepthForest {
  std::vector<Vertex> parent;

  int size() const { return static_cast<int>(parent.size()); }
  /// Vertices on the longest root-to-leaf path.
  int height() const;
  /// 1 for roots.
  std::vector<int> depths() const;
  std::vector<std::vector<Vertex>> children() const;
  std::vector<Vertex> roots() const;
  /// v and all its descendants, in preorder (children by id).
  std::vector<Vertex> subtree(Vertex v) const;
  bool is_ancestor(Vertex ancestor, Vertex v) const;
};

/// nullopt when the forest is acyclic, spans g, has height <= max_height and
/// every edge of g joins an ancestor-descendant pair; else a description.
std::optional<std::string> validate_treedepth(const Graph& g, const TreedepthForest& forest,
                                              int max_height);

}  // namespace flexicolor

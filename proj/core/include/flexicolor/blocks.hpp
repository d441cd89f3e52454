#pragma once

#include <vector>

#include "flexicolor/graph.hpp"

namespace flexicolor {

/// Clique takes precedence over odd cycle, so K3 is tagged Clique.
enum class BlockKind { Clique, OddCycle, Other };

const char* to_string(BlockKind kind);

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // (u < v), sorted
  BlockKind kind = BlockKind::Other;
  /// Leaf of the block-cut tree: shares exactly one cut-vertex with the rest.
  bool terminal = false;
  std::vector<Vertex> cut_vertices;  // cut-vertices of the graph lying in this block
};

struct BlockCutTree {
  std::vector<Block> blocks;          // ordered by smallest (vertex, edge)
  std::vector<Vertex> cut_vertices;   // sorted
  /// (block index, cut-vertex) adjacencies of the bipartite tree.
  std::vector<std::pair<int, Vertex>> tree_edges;
  /// For each vertex, indices of the blocks containing it.
  std::vector<std::vector<int>> blocks_of_vertex;

  bool is_cut_vertex(Vertex v) const { return blocks_of_vertex[v].size() > 1; }
};

/// Biconnected decomposition. Requires a connected graph with n >= 1;
/// a disconnected input raises PreconditionError naming two components.
BlockCutTree block_cut_tree(const Graph& g);

/// Exhaustive tag of the subgraph induced by `vertices`.
BlockKind classify_block(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace flexicolor

#include "flexicolor/blocks.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace flexicolor {

const char* to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Clique: return "clique";
    case BlockKind::OddCycle: return "odd-cycle";
    case BlockKind::Other: return "other";
  }
  return "?";
}

BlockKind classify_block(const Graph& g, const std::vector<Vertex>& vertices) {
  const long long k = static_cast<long long>(vertices.size());
  std::vector<bool> in(g.size(), false);
  for (Vertex v : vertices) in[v] = true;
  long long edges = 0;
  bool all_degree_two = true;
  for (Vertex v : vertices) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += in[w] ? 1 : 0;
    edges += d;
    all_degree_two = all_degree_two && d == 2;
  }
  edges /= 2;
  if (edges == k * (k - 1) / 2) return BlockKind::Clique;
  // a block is connected, so 2-regular means a cycle
  if (all_degree_two && k % 2 == 1) return BlockKind::OddCycle;
  return BlockKind::Other;
}

BlockCutTree block_cut_tree(const Graph& g) {
  const int n = g.size();
  if (n == 0) throw PreconditionError("block_cut_tree: empty graph");
  if (auto comps = components(g); comps.size() > 1) {
    throw PreconditionError("graph is disconnected: vertices " + std::to_string(comps[0].front()) +
                            " and " + std::to_string(comps[1].front()) +
                            " lie in different components");
  }

  BlockCutTree tree;
  tree.blocks_of_vertex.assign(n, {});
  if (n == 1) {
    tree.blocks.push_back({{0}, {}, BlockKind::Clique, false, {}});
    tree.blocks_of_vertex[0].push_back(0);
    return tree;
  }

  // Iterative Hopcroft-Tarjan with an edge stack.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> raw_blocks;
  int timer = 0;
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Vertex v = stack.back();
    auto nbrs = g.neighbors(v);
    if (next_child[v] < nbrs.size()) {
      Vertex w = nbrs[next_child[v]++];
      if (disc[w] == -1) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        edge_stack.emplace_back(v, w);
        stack.push_back(w);
      } else if (w != parent[v] && disc[w] < disc[v]) {
        low[v] = std::min(low[v], disc[w]);
        edge_stack.emplace_back(v, w);
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[v];
    if (p == -1) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      std::vector<Edge> block;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e.first == p && e.second == v) break;
      }
      raw_blocks.push_back(std::move(block));
    }
  }

  for (auto& raw : raw_blocks) {
    Block b;
    for (auto& [u, w] : raw) {
      b.edges.emplace_back(std::min(u, w), std::max(u, w));
      b.vertices.push_back(u);
      b.vertices.push_back(w);
    }
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    b.kind = classify_block(g, b.vertices);
    tree.blocks.push_back(std::move(b));
  }
  std::sort(tree.blocks.begin(), tree.blocks.end(), [](const Block& a, const Block& b) {
    return std::tie(a.vertices, a.edges) < std::tie(b.vertices, b.edges);
  });
  for (int i = 0; i < static_cast<int>(tree.blocks.size()); ++i) {
    for (Vertex v : tree.blocks[i].vertices) tree.blocks_of_vertex[v].push_back(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (tree.blocks_of_vertex[v].size() < 2) continue;
    tree.cut_vertices.push_back(v);
    for (int b : tree.blocks_of_vertex[v]) {
      tree.blocks[b].cut_vertices.push_back(v);
      tree.tree_edges.emplace_back(b, v);
    }
  }
  std::sort(tree.tree_edges.begin(), tree.tree_edges.end());
  if (tree.blocks.size() > 1) {
    for (auto& b : tree.blocks) b.terminal = b.cut_vertices.size() == 1;
  }
  return tree;
}

}  // namespace flexicolor

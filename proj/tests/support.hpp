#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "flexicolor/graph.hpp"
#include "flexicolor/lists.hpp"

namespace testing {

using flexicolor::Edge;
using flexicolor::Graph;
using flexicolor::Vertex;

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : e) if (u > v) std::swap(u, v);
  return Graph(10, e);
}

inline Graph diamond() { return Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph bowtie() {
  return Graph(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

/// Edge subset `mask` of K_n.
inline Graph from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) e.emplace_back(i, j);
    Graph g(n, e);
    if (flexicolor::is_connected(g)) return g;
  }
}

/// Vertex set of every block, found by checking all vertex subsets.
inline std::vector<std::vector<Vertex>> brute_force_blocks(const Graph& g) {
  const int n = g.size();
  std::vector<std::uint32_t> good;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v) if (s >> v & 1) vs.push_back(v);
    auto sub = flexicolor::induced_subgraph(g, vs);
    if (!flexicolor::is_connected(sub.graph)) continue;
    if (vs.size() == 1 && g.degree(vs[0]) > 0) continue;
    bool ok = true;
    if (vs.size() >= 3) {
      for (int x = 0; x < sub.graph.size() && ok; ++x) {
        std::vector<bool> removed(sub.graph.size(), false);
        removed[x] = true;
        ok = flexicolor::components(sub.graph, removed).size() == 1;
      }
    }
    if (ok) good.push_back(s);
  }
  std::vector<std::vector<Vertex>> blocks;
  for (auto s : good) {
    bool maximal = std::none_of(good.begin(), good.end(), [&](auto t) { return t != s && (t & s) == s; });
    if (!maximal) continue;
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v) if (s >> v & 1) vs.push_back(v);
    blocks.push_back(vs);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

inline bool proper(const Graph& g, const std::vector<int>& color) {
  for (auto [u, v] : g.edges()) if (color[u] == color[v]) return false;
  return true;
}

}  // namespace testing

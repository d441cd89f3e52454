#include "flexicolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace flexicolor {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  adjacency_.resize(vertex_count);
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
    }
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end()) {
    throw PreconditionError("parallel edge (" + std::to_string(it->first) + ", " +
                            std::to_string(it->second) + ")");
  }
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      int j = local[w];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return {Graph(static_cast<int>(vertices.size()), edges),
          std::vector<Vertex>(vertices.begin(), vertices.end())};
}

std::vector<std::vector<Vertex>> components(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.size();
  std::vector<bool> seen(n, false);
  if (!removed.empty()) {
    for (int v = 0; v < n; ++v) seen[v] = removed[v];
  }
  std::vector<std::vector<Vertex>> result;
  std::vector<Vertex> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool is_connected(const Graph& g) { return g.size() <= 1 || components(g).size() == 1; }

std::vector<int> bfs_distances(const Graph& g, Vertex source, const std::vector<bool>& removed) {
  std::vector<int> dist(g.size(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] != -1 || (!removed.empty() && removed[w])) continue;
      dist[w] = dist[v] + 1;
      queue.push(w);
    }
  }
  return dist;
}

Graph graph_power(const Graph& g, int power) {
  if (power < 1) throw PreconditionError("graph power must be positive");
  if (power == 1) return g;
  const int n = g.size();
  std::vector<Edge> edges;
  std::vector<int> dist(n, -1);
  std::vector<Vertex> touched;
  for (Vertex s = 0; s < n; ++s) {
    // bounded BFS
    std::vector<Vertex> frontier{s};
    dist[s] = 0;
    touched.assign(1, s);
    for (int d = 1; d <= power && !frontier.empty(); ++d) {
      std::vector<Vertex> next;
      for (Vertex v : frontier) {
        for (Vertex w : g.neighbors(v)) {
          if (dist[w] != -1) continue;
          dist[w] = d;
          touched.push_back(w);
          next.push_back(w);
          if (w > s) edges.emplace_back(s, w);
        }
      }
      frontier = std::move(next);
    }
    for (Vertex v : touched) dist[v] = -1;
  }
  return Graph(n, edges);
}

bool is_complete(const Graph& g) {
  const long long n = g.size();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_cycle(const Graph& g) {
  if (g.size() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_regular(const Graph& g) {
  for (Vertex v = 1; v < g.size(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.size() >= 1 && g.edge_count() == g.size() - 1 && is_connected(g);
}

namespace {

bool connected_without(const Graph& g, const std::vector<bool>& removed) {
  int remaining = 0;
  for (bool r : removed) remaining += r ? 0 : 1;
  if (remaining == 0) return false;
  return components(g, removed).size() == 1;
}

/// Connected with no cut vertex once `removed` is deleted. Iterative
/// low-point search.
bool biconnected_without(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.size();
  Vertex root = -1;
  int remaining = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) continue;
    ++remaining;
    if (root < 0) root = v;
  }
  if (remaining == 0) return false;
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> stack{root};
  order[root] = low[root] = 0;
  int counter = 1, root_children = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto nb = g.neighbors(v);
    if (next[v] < nb.size()) {
      const Vertex w = nb[next[v]++];
      if (removed[w] || w == parent[v]) continue;
      if (order[w] < 0) {
        parent[w] = v;
        order[w] = low[w] = counter++;
        if (v == root) ++root_children;
        stack.push_back(w);
      } else {
        low[v] = std::min(low[v], order[w]);
      }
      continue;
    }
    stack.pop_back();
    const Vertex p = parent[v];
    if (p < 0) continue;
    low[p] = std::min(low[p], low[v]);
    if (p != root && low[v] >= order[p]) return false;
  }
  return counter == remaining && root_children <= 1;
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
  if (k > 3) throw PreconditionError("is_k_connected supports k <= 3");
  const int n = g.size();
  if (n <= k) return false;
  if (k <= 0) return true;
  std::vector<bool> removed(n, false);
  if (k == 1) return connected_without(g, removed);
  if (k == 2) return biconnected_without(g, removed);
  for (Vertex a = 0; a < n; ++a) {
    removed[a] = true;
    const bool ok = biconnected_without(g, removed);
    removed[a] = false;
    if (!ok) return false;
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> in(g.size(), false);
  for (Vertex v : vertices) in[v] = true;
  for (Vertex v : vertices) {
    for (Vertex w : g.neighbors(v)) {
      if (in[w]) return false;
    }
  }
  return true;
}

}  // namespace flexicolor

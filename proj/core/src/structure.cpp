#include "flexicolor/structure.hpp"

#include <algorithm>

namespace flexicolor {

std::vector<std::vector<Vertex>> back_neighbors(const Graph& g, const KTreeOrder& order) {
  std::vector<int> position(g.size(), -1);
  for (std::size_t i = 0; i < order.sequence.size(); ++i) position[order.sequence[i]] = static_cast<int>(i);
  std::vector<std::vector<Vertex>> back(g.size());
  for (Vertex v : order.sequence) {
    for (Vertex w : g.neighbors(v)) {
      if (position[w] >= 0 && position[w] < position[v]) back[v].push_back(w);
    }
  }
  return back;
}

std::optional<OrderViolation> validate_ktree_order(const Graph& g, const KTreeOrder& order) {
  const int n = g.size();
  const int k = order.width;
  if (k < 0) return OrderViolation{0, -1, "negative width"};
  if (static_cast<int>(order.sequence.size()) != n) {
    return OrderViolation{0, -1, "sequence length differs from vertex count"};
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < order.sequence.size(); ++i) {
    Vertex v = order.sequence[i];
    if (!g.contains(v)) return OrderViolation{i, v, "vertex out of range"};
    if (seen[v]) return OrderViolation{i, v, "vertex repeated"};
    seen[v] = true;
  }
  if (n < k) return OrderViolation{0, -1, "fewer vertices than the width"};
  if (k == 0) {
    if (g.edge_count() != 0) {
      return OrderViolation{0, g.edges().front().first, "a 0-tree has no edges"};
    }
    return std::nullopt;
  }
  auto back = back_neighbors(g, order);
  for (std::size_t i = 0; i < order.sequence.size(); ++i) {
    Vertex v = order.sequence[i];
    const auto& b = back[v];
    const std::size_t expected = std::min<std::size_t>(i, static_cast<std::size_t>(k));
    if (b.size() != expected) {
      return OrderViolation{i, v,
                            "has " + std::to_string(b.size()) + " back-neighbours, expected " +
                                std::to_string(expected)};
    }
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = x + 1; y < b.size(); ++y) {
        if (!g.adjacent(b[x], b[y])) {
          return OrderViolation{i, v, "back-neighbours do not form a clique"};
        }
      }
    }
  }
  return std::nullopt;
}

int TreedepthForest::height() const {
  int h = 0;
  for (int d : depths()) h = std::max(h, d);
  return h;
}

std::vector<int> TreedepthForest::depths() const {
  const int n = size();
  std::vector<int> depth(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    // walk up until a known depth; parent chains are short at desk scale
    int d = 0;
    Vertex u = v;
    while (u != -1 && depth[u] == 0 && d <= n) {
      ++d;
      u = parent[u];
    }
    if (d > n) return std::vector<int>(n, n + 1);  // cycle: report an absurd height
    int base = u == -1 ? 0 : depth[u];
    u = v;
    for (int i = d; i > 0; --i) {
      depth[u] = base + i;
      u = parent[u];
    }
  }
  return depth;
}

std::vector<std::vector<Vertex>> TreedepthForest::children() const {
  std::vector<std::vector<Vertex>> kids(size());
  for (Vertex v = 0; v < size(); ++v) {
    if (parent[v] >= 0) kids[parent[v]].push_back(v);
  }
  return kids;
}

std::vector<Vertex> TreedepthForest::roots() const {
  std::vector<Vertex> r;
  for (Vertex v = 0; v < size(); ++v) {
    if (parent[v] < 0) r.push_back(v);
  }
  return r;
}

std::vector<Vertex> TreedepthForest::subtree(Vertex v) const {
  auto kids = children();
  std::vector<Vertex> out;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (auto it = kids[u].rbegin(); it != kids[u].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

bool TreedepthForest::is_ancestor(Vertex ancestor, Vertex v) const {
  for (Vertex u = parent[v]; u != -1; u = parent[u]) {
    if (u == ancestor) return true;
  }
  return false;
}

std::optional<std::string> validate_treedepth(const Graph& g, const TreedepthForest& forest,
                                              int max_height) {
  const int n = g.size();
  if (forest.size() != n) return "forest does not span the graph";
  for (Vertex v = 0; v < n; ++v) {
    Vertex p = forest.parent[v];
    if (p < -1 || p >= n || p == v) return "invalid parent of vertex " + std::to_string(v);
  }
  const int height = forest.height();
  if (height > n) return "parent pointers contain a cycle";
  if (height > max_height) {
    return "forest height " + std::to_string(height) + " exceeds " + std::to_string(max_height);
  }
  for (auto [u, v] : g.edges()) {
    if (!forest.is_ancestor(u, v) && !forest.is_ancestor(v, u)) {
      return "edge (" + std::to_string(u) + ", " + std::to_string(v) +
             ") does not join an ancestor-descendant pair";
    }
  }
  return std::nullopt;
}

}  // namespace flexicolor

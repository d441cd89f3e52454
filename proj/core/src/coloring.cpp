#include "flexicolor/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace flexicolor {

const char* to_string(ColoringMode mode) {
  return mode == ColoringMode::Greedy ? "greedy" : "brooks";
}

namespace {

int count_colors(const std::vector<int>& color) {
  int used = 0;
  for (int c : color) used = std::max(used, c + 1);
  return used;
}

int smallest_free(const Graph& g, Vertex v, const std::vector<int>& color) {
  std::vector<bool> taken(g.degree(v) + 2, false);
  for (Vertex w : g.neighbors(v)) {
    int c = color[w];
    if (c >= 0 && c < static_cast<int>(taken.size())) taken[c] = true;
  }
  int c = 0;
  while (taken[c]) ++c;
  return c;
}

std::vector<int> greedy_in_order(const Graph& g, std::span<const Vertex> order,
                                 std::vector<int> color) {
  for (Vertex v : order) color[v] = smallest_free(g, v, color);
  return color;
}

/// Vertices of `g` minus `removed`, sorted by decreasing distance from root
/// (ties by id), root last.
std::vector<Vertex> decreasing_distance_order(const Graph& g, Vertex root,
                                              const std::vector<bool>& removed) {
  auto dist = bfs_distances(g, root, removed);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist[v] >= 0) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return dist[a] > dist[b]; });
  return order;
}

std::vector<int> two_color(const Graph& g) {
  std::vector<int> dist = bfs_distances(g, 0);
  std::vector<int> color(g.size());
  for (Vertex v = 0; v < g.size(); ++v) color[v] = dist[v] % 2;
  return color;
}

/// Connected, maxdeg >= 3, not complete.
std::vector<int> brooks_connected(const Graph& g) {
  const int n = g.size();
  const int delta = g.max_degree();
  std::vector<int> color(n, -1);

  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < delta) {
      auto order = decreasing_distance_order(g, v, {});
      return greedy_in_order(g, order, std::move(color));
    }
  }

  // Regular from here on.
  std::vector<bool> removed(n, false);
  for (Vertex cut = 0; cut < n; ++cut) {
    removed[cut] = true;
    auto parts = components(g, removed);
    removed[cut] = false;
    if (parts.size() < 2) continue;
    // Each piece G[C ∪ {cut}] has the cut-vertex below full degree.
    for (auto& part : parts) {
      part.push_back(cut);
      auto sub = induced_subgraph(g, part);
      const Vertex local_cut = static_cast<Vertex>(part.size()) - 1;
      auto order = decreasing_distance_order(sub.graph, local_cut, {});
      auto local = greedy_in_order(sub.graph, order, std::vector<int>(part.size(), -1));
      const int at_cut = local[local_cut];
      for (std::size_t i = 0; i < part.size(); ++i) {
        int c = local[i];
        if (c == at_cut) c = 0;
        else if (c == 0) c = at_cut;
        color[part[i]] = c;
      }
    }
    return color;
  }

  // 2-connected regular: find y with non-adjacent neighbours x, z such that
  // g - {x, z} stays connected.
  for (Vertex y = 0; y < n; ++y) {
    auto nbrs = g.neighbors(y);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        Vertex x = nbrs[i], z = nbrs[j];
        if (g.adjacent(x, z)) continue;
        removed[x] = removed[z] = true;
        bool ok = components(g, removed).size() == 1;
        if (ok) {
          color[x] = color[z] = 0;
          auto order = decreasing_distance_order(g, y, removed);
          return greedy_in_order(g, order, std::move(color));
        }
        removed[x] = removed[z] = false;
      }
    }
  }
  throw InternalError("Brooks coloring: no admissible vertex triple found");
}

}  // namespace

VertexColoring proper_coloring(const Graph& g, int power, ColoringMode mode) {
  if (power < 1) throw PreconditionError("power must be positive");
  const Graph h = graph_power(g, power);
  VertexColoring out;
  out.mode = mode;
  out.power = power;
  if (h.size() == 0) return out;

  if (mode == ColoringMode::Greedy) {
    std::vector<Vertex> order(h.size());
    std::iota(order.begin(), order.end(), 0);
    out.color = greedy_in_order(h, order, std::vector<int>(h.size(), -1));
  } else {
    if (!is_connected(h)) throw PreconditionError("Brooks coloring requires a connected graph");
    if (is_complete(h)) {
      throw PreconditionError("Brooks coloring: graph is complete (K" + std::to_string(h.size()) +
                              ")");
    }
    if (is_cycle(h) && h.size() % 2 == 1) {
      throw PreconditionError("Brooks coloring: graph is an odd cycle (C" +
                              std::to_string(h.size()) + ")");
    }
    out.color = h.max_degree() <= 2 ? two_color(h) : brooks_connected(h);
    if (count_colors(out.color) > std::max(h.max_degree(), 1)) {
      throw InternalError("Brooks coloring used more than maxdeg colors");
    }
  }
  out.colors_used = count_colors(out.color);
  return out;
}

IndependentSubset independent_request_subset(const Graph& g, std::span<const Vertex> requested,
                                             int distance, ColoringMode mode,
                                             std::span<const Weight> weights) {
  if (distance < 1) throw PreconditionError("distance must be positive");
  for (Vertex v : requested) {
    if (!g.contains(v)) throw PreconditionError("requested vertex " + std::to_string(v) + " out of range");
  }
  if (!weights.empty() && static_cast<int>(weights.size()) != g.size()) {
    throw PreconditionError("weights must be indexed by vertex");
  }
  IndependentSubset out;
  out.mode = mode;
  out.distance = distance;
  std::vector<Vertex> pool(requested.begin(), requested.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.empty()) return out;

  auto coloring = proper_coloring(g, distance, mode);
  out.colors_used = coloring.colors_used;
  std::vector<Weight> class_value(coloring.colors_used, 0);
  for (Vertex v : pool) class_value[coloring.color[v]] += weights.empty() ? 1 : weights[v];
  const int best = static_cast<int>(std::max_element(class_value.begin(), class_value.end()) -
                                    class_value.begin());
  for (Vertex v : pool) {
    if (coloring.color[v] == best) out.vertices.push_back(v);
  }
  return out;
}

}  // namespace flexicolor

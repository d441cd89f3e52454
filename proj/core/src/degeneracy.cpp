#include "flexicolor/degeneracy.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <thread>

namespace flexicolor::degeneracy {

namespace {

std::string vname(Vertex v) { return "vertex " + std::to_string(v); }

std::vector<Vertex> sorted_unique(std::span<const Vertex> vs, int n, const char* what) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  for (Vertex v : out) {
    if (v < 0 || v >= n) throw PreconditionError(std::string(what) + " " + std::to_string(v) + " out of range");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.size(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

bool connected_within(const std::vector<Mask>& adj, Mask keep) {
  if (keep == 0) return true;
  Mask seen = keep & (~keep + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= keep & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == keep;
}

/// Each member has a neighbor outside the set and the rest stays connected.
bool removable(const std::vector<Mask>& adj, Mask all, Mask set) {
  for (Mask s = set; s; s &= s - 1) {
    if ((adj[std::countr_zero(s)] & ~set) == 0) return false;
  }
  return connected_within(adj, all & ~set);
}

bool removable(const Graph& g, std::span<const Vertex> set) {
  std::vector<bool> removed(g.size(), false);
  for (Vertex v : set) removed[v] = true;
  for (Vertex v : set) {
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return !removed[u]; })) return false;
  }
  return components(g, removed).size() <= 1;
}

std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

GameConnectivity minimize_ratio(int n, const std::function<int(Mask)>& best) {
  GameConnectivity result;
  bool have = false;
  for (Mask r = 1; r < (Mask{1} << n); ++r) {
    Rational ratio(best(r), std::popcount(r));
    if (!have || ratio < result.kappa) {
      result.kappa = ratio;
      result.witness = mask_vertices(r);
      have = true;
    }
  }
  return result;
}

void require_game_input(const Graph& g, int cap) {
  if (g.size() == 0) throw PreconditionError("graph has no vertices");
  if (g.size() > cap || g.size() > 30) {
    throw BudgetExceeded("game connectivity brute force capped at " + std::to_string(std::min(cap, 30)) +
                         " vertices, graph has " + std::to_string(g.size()));
  }
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
}

}  // namespace

std::vector<Vertex> first_among_neighbors(const Graph& g, std::span<const Vertex> order) {
  std::vector<int> position(g.size(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) position[order[i]] = i;
  std::vector<Vertex> first;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(v);
    if (std::all_of(nb.begin(), nb.end(), [&](Vertex u) { return position[u] > position[v]; })) first.push_back(v);
  }
  return first;
}

std::optional<std::string> check_ordering(const Graph& g, const DegeneracyOrdering& ordering) {
  const int n = g.size();
  if (static_cast<int>(ordering.order.size()) != n) return "order has " + std::to_string(ordering.order.size()) +
                                                              " entries for " + std::to_string(n) + " vertices";
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = ordering.order[i];
    if (v < 0 || v >= n) return "order entry " + std::to_string(v) + " out of range";
    if (position[v] >= 0) return vname(v) + " appears twice";
    position[v] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    int back = 0;
    for (Vertex u : g.neighbors(v)) back += position[u] < position[v];
    if (back > ordering.bound) {
      return vname(v) + " has " + std::to_string(back) + " earlier neighbors, bound " + std::to_string(ordering.bound);
    }
  }
  if (ordering.first != first_among_neighbors(g, ordering.order)) return "first-vertex set does not match the order";
  return std::nullopt;
}

DegeneracyOrdering ordering_from_tree(const Graph& g, std::span<const Edge> tree, std::span<const Vertex> leaves,
                                      Vertex w) {
  const int n = g.size();
  if (!g.contains(w)) throw PreconditionError("start " + vname(w) + " out of range");
  if (g.degree(w) >= g.max_degree()) {
    throw PreconditionError("start " + vname(w) + " has degree " + std::to_string(g.degree(w)) + ", need < " +
                            std::to_string(g.max_degree()));
  }
  if (static_cast<int>(tree.size()) != n - 1) throw PreconditionError("tree needs n - 1 edges");
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : tree) {
    if (!g.contains(u) || !g.contains(v) || !g.adjacent(u, v)) {
      throw PreconditionError("tree edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the graph");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  auto leaf_set = sorted_unique(leaves, n, "leaf");
  std::vector<bool> is_leaf(n, false);
  for (Vertex v : leaf_set) {
    if (v == w) throw PreconditionError("start " + vname(w) + " is in the leaf set");
    if (adj[v].size() != 1) throw PreconditionError(vname(v) + " is not a leaf of the tree");
    is_leaf[v] = true;
  }
  if (!is_independent(g, leaf_set)) throw PreconditionError("leaf set is not independent");

  std::vector<Vertex> visit;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{w};
  seen[w] = true;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    visit.push_back(x);
    for (auto it = adj[x].rbegin(); it != adj[x].rend(); ++it) {
      if (!seen[*it] && !is_leaf[*it]) {
        seen[*it] = true;
        stack.push_back(*it);
      }
    }
  }
  if (static_cast<int>(visit.size() + leaf_set.size()) != n) throw PreconditionError("tree does not span the graph");
  visit.insert(visit.end(), leaf_set.begin(), leaf_set.end());

  DegeneracyOrdering out;
  out.order.assign(visit.rbegin(), visit.rend());
  out.bound = g.max_degree() - 1;
  out.first = first_among_neighbors(g, out.order);
  if (auto bad = check_ordering(g, out)) throw InternalError("walk ordering invalid: " + *bad);
  if (!std::includes(out.first.begin(), out.first.end(), leaf_set.begin(), leaf_set.end())) {
    throw InternalError("a leaf does not precede its neighbors");
  }
  return out;
}

Hypergraph component_hypergraph(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.size(), false);
  for (Vertex v : removed) gone[v] = true;
  auto parts = components(g, gone);
  std::vector<int> label(g.size(), -1);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    for (Vertex v : parts[i]) label[v] = i;
  }
  std::vector<std::vector<int>> edges;
  for (Vertex r : removed) {
    std::vector<int> e;
    for (Vertex u : g.neighbors(r)) {
      if (label[u] >= 0) e.push_back(label[u]);
    }
    if (e.empty()) throw PreconditionError(vname(r) + " touches no remaining component");
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(parts.size()), std::move(edges));
}

PipelineResult flexible_degeneracy_order(const Graph& g, std::span<const Vertex> requested,
                                         const PipelineOptions& options) {
  const int n = g.size();
  const int maxdeg = g.max_degree();
  if (options.boundary_k < 0) throw PreconditionError("boundary_k must be non-negative");
  if (options.boundary_k == 0) {
    if (!is_k_connected(g, 3)) throw PreconditionError("graph is not 3-connected");
  } else if (!is_connected(g)) {
    throw PreconditionError("graph is not connected");
  }
  if (is_regular(g)) throw PreconditionError("graph is regular");
  if (maxdeg < 3) throw PreconditionError("maximum degree " + std::to_string(maxdeg) + " < 3");
  auto r0 = sorted_unique(requested, n, "requested vertex");

  std::vector<Vertex> low;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < maxdeg) low.push_back(v);
  }
  if (low.size() == 1 && r0 == low) {
    throw PreconditionError("request is exactly the single low-degree " + vname(low[0]));
  }
  Vertex w = low[0];
  for (Vertex v : low) {
    if (!std::binary_search(r0.begin(), r0.end(), v)) {
      w = v;
      break;
    }
  }

  PipelineResult result;
  auto& trace = result.trace;
  trace.low_vertex = w;
  for (Vertex v : r0) {
    if (v != w) trace.requests.push_back(v);
  }
  const int distance = options.boundary_k + 1;
  auto far = independent_request_subset(g, trace.requests, distance, options.mode);
  trace.independent = far.vertices;
  trace.colors_used = far.colors_used;
  trace.mode = far.mode;

  Hypergraph h = component_hypergraph(g, trace.independent);
  trace.hyper_vertices = h.vertex_count;
  trace.hyper_edges = h.edge_count();
  if (!is_k_edge_connected(h, 3)) {
    if (options.boundary_k == 0) throw InternalError("component hypergraph of a 3-connected graph is not 3-edge-connected");
    throw PreconditionError("component hypergraph is not 3-edge-connected");
  }
  if (h.rank() > maxdeg) throw InternalError("hyperedge larger than the maximum degree");
  trace.epsilon = epsilon(maxdeg);
  auto kept = hypergraph_spanning_set(h, maxdeg);
  std::vector<bool> in_kept(trace.independent.size(), false);
  for (int e : kept) in_kept[e] = true;
  for (std::size_t i = 0; i < trace.independent.size(); ++i) {
    (in_kept[i] ? trace.spanning : trace.leaves).push_back(trace.independent[i]);
  }
  if (Rational(static_cast<std::int64_t>(trace.leaves.size())) <
      trace.epsilon * Rational(static_cast<std::int64_t>(trace.independent.size()))) {
    throw InternalError("too few leaf requests survive the spanning set");
  }

  std::vector<bool> is_leaf(n, false);
  for (Vertex v : trace.leaves) is_leaf[v] = true;
  std::vector<Edge> tree;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue{w};
  seen[w] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex u : g.neighbors(x)) {
      if (seen[u] || is_leaf[u]) continue;
      seen[u] = true;
      tree.emplace_back(x, u);
      queue.push_back(u);
    }
  }
  if (queue.size() + trace.leaves.size() != static_cast<std::size_t>(n)) {
    throw InternalError("graph minus the leaf requests is disconnected");
  }
  for (Vertex r : trace.leaves) tree.emplace_back(g.neighbors(r)[0], r);

  result.ordering = ordering_from_tree(g, tree, trace.leaves, w);
  for (Vertex v : result.ordering.first) result.first_requested += std::binary_search(r0.begin(), r0.end(), v);

  const Graph reach = distance == 1 ? g : graph_power(g, distance);
  const int palette = options.mode == ColoringMode::Greedy ? reach.max_degree() + 1 : reach.max_degree();
  result.certified_fraction = trace.epsilon / Rational(2 * palette);
  result.certified_amount = result.certified_fraction * Rational(static_cast<std::int64_t>(r0.size()));
  result.derivation = "eps(" + std::to_string(maxdeg) + ")=" + to_string(trace.epsilon) + "; |R|>=|R0|/2; " +
                      std::string(to_string(options.mode)) + " classes on distance " + std::to_string(distance) +
                      " give |R'|>=|R|/" + std::to_string(palette) + "; |R''|>=eps|R'|; fraction " +
                      to_string(result.certified_fraction) + " (coarser form eps/(2(D+1)^2) = " +
                      to_string(trace.epsilon / Rational(2 * (maxdeg + 1) * (maxdeg + 1))) + ")";
  if (!result.bound_met()) throw InternalError("first requested vertices fall below the certified amount");
  return result;
}

GameConnectivity exact_game_connectivity(const Graph& g, int cap) {
  require_game_input(g, cap);
  const int n = g.size();
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  const auto adj = adjacency_masks(g);
  const std::size_t total = std::size_t{1} << n;
  std::vector<char> ok(total, 0);
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  if (total < 4096 || workers == 1) {
    for (Mask m = 1; m < total; ++m) ok[m] = removable(adj, all, m);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t m = 1 + t; m < total; m += workers) ok[m] = removable(adj, all, static_cast<Mask>(m));
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<int> best(total, 0);
  for (Mask m = 1; m < total; ++m) {
    if (ok[m]) {
      best[m] = std::popcount(m);
      continue;
    }
    for (Mask s = m; s; s &= s - 1) best[m] = std::max(best[m], best[m & ~(s & (~s + 1))]);
  }
  return minimize_ratio(n, [&](Mask r) { return best[r]; });
}

GameConnectivity game_connectivity_by_trees(const Graph& g, int cap) {
  require_game_input(g, cap);
  const int n = g.size();
  const auto& edges = g.edges();
  const int m = g.edge_count();
  std::set<Mask> leaf_sets;
  if (n == 1) leaf_sets.insert(0);
  std::vector<int> pick(n - 1);
  std::function<void(int, int)> choose = [&](int depth, int from) {
    if (depth == n - 1) {
      std::vector<int> parent(n);
      for (int i = 0; i < n; ++i) parent[i] = i;
      std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      std::vector<int> deg(n, 0);
      for (int e : pick) {
        auto [u, v] = edges[e];
        int a = find(u), b = find(v);
        if (a == b) return;
        parent[a] = b;
        ++deg[u];
        ++deg[v];
      }
      Mask leaves = 0;
      for (int v = 0; v < n; ++v) {
        if (deg[v] == 1) leaves |= Mask{1} << v;
      }
      leaf_sets.insert(leaves);
      return;
    }
    for (int e = from; e <= m - (n - 1 - depth); ++e) {
      pick[depth] = e;
      choose(depth + 1, e + 1);
    }
  };
  if (n > 1) choose(0, 0);
  return minimize_ratio(n, [&](Mask r) {
    int best = 0;
    for (Mask leaves : leaf_sets) best = std::max(best, std::popcount(r & leaves));
    return best;
  });
}

Rational leaf_ratio(const Graph& g, std::span<const Vertex> r, int cap) {
  auto set = sorted_unique(r, g.size(), "vertex");
  if (set.empty()) throw PreconditionError("leaf ratio of an empty set");
  if (static_cast<int>(set.size()) > cap || set.size() > 30) {
    throw BudgetExceeded("leaf ratio brute force capped at " + std::to_string(cap) + " vertices");
  }
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  int best = 0;
  const std::size_t k = set.size();
  std::vector<Vertex> chosen;
  for (std::size_t m = 1; m < (std::size_t{1} << k); ++m) {
    int size = std::popcount(m);
    if (size <= best) continue;
    chosen.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (m >> i & 1) chosen.push_back(set[i]);
    }
    if (removable(g, chosen)) best = size;
  }
  return Rational(best, static_cast<std::int64_t>(k));
}

}  // namespace flexicolor::degeneracy

#include "flexicolor/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace flexicolor::degeneracy {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), count_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    --count_;
    return true;
  }
  int count() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

int distinct_roots(DisjointSets& sets, const std::vector<int>& edge) {
  std::vector<int> roots;
  for (int v : edge) roots.push_back(sets.find(v));
  std::sort(roots.begin(), roots.end());
  return static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

bool unite_edge(DisjointSets& sets, const std::vector<int>& edge) {
  bool merged = false;
  for (std::size_t i = 1; i < edge.size(); ++i) merged |= sets.unite(edge[0], edge[i]);
  return merged;
}

/// Unit-capacity flow network: vertex v is node v, edge e splits into
/// n + 2e -> n + 2e + 1 with capacity one.
class EdgeSplitFlow {
 public:
  explicit EdgeSplitFlow(const Hypergraph& h) : n_(h.vertex_count) {
    const int nodes = n_ + 2 * h.edge_count();
    adj_.resize(nodes);
    for (int e = 0; e < h.edge_count(); ++e) {
      const int in = n_ + 2 * e, out = in + 1;
      add(in, out, 1);
      for (int v : h.edges[e]) {
        add(v, in, kInf);
        add(out, v, kInf);
      }
    }
  }

  /// Max flow from s to t, stopping once it reaches `cap`.
  int flow(int s, int t, int cap) {
    for (auto& a : arcs_) a.flow = 0;
    int total = 0;
    while (total < cap && augment(s, t)) ++total;
    return total;
  }

 private:
  static constexpr int kInf = 1 << 29;
  struct Arc {
    int to, cap, flow;
  };

  void add(int a, int b, int cap) {
    adj_[a].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({b, cap, 0});
    adj_[b].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({a, 0, 0});
  }

  bool augment(int s, int t) {
    std::vector<int> via(adj_.size(), -1);
    std::vector<int> queue{s};
    std::vector<bool> seen(adj_.size(), false);
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
      int x = queue[head];
      for (int id : adj_[x]) {
        const auto& a = arcs_[id];
        if (seen[a.to] || a.cap - a.flow <= 0) continue;
        seen[a.to] = true;
        via[a.to] = id;
        queue.push_back(a.to);
      }
    }
    if (!seen[t]) return false;
    for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
      arcs_[via[x]].flow += 1;
      arcs_[via[x] ^ 1].flow -= 1;
    }
    return true;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

struct Level {
  Hypergraph graph;
  std::vector<int> origin;  // edge index in the caller's hypergraph
};

std::vector<int> spanning_recursive(const Hypergraph& h, int d) {
  const int n = h.vertex_count;
  if (n <= 1) return {};
  DisjointSets sets(n);
  std::vector<int> chosen;
  if (d <= 2) {
    for (int e = 0; e < h.edge_count(); ++e) {
      if (unite_edge(sets, h.edges[e])) chosen.push_back(e);
    }
    return chosen;
  }

  const int threshold = (d + 8) / 3;  // ceil(d/3 + 2)
  const int reduced = (d + 5) / 3;    // ceil(d/3 + 1)
  std::vector<bool> in_first(h.edge_count(), false);
  for (bool grew = true; grew;) {
    grew = false;
    for (int e = 0; e < h.edge_count(); ++e) {
      if (in_first[e] || distinct_roots(sets, h.edges[e]) < threshold) continue;
      unite_edge(sets, h.edges[e]);
      in_first[e] = true;
      chosen.push_back(e);
      grew = true;
    }
  }
  const Rational k(3, d);
  const Rational inner = epsilon(reduced);
  const Rational alpha = d == 3 ? Rational(1, 4) : (k * inner - k + 1) / (1 + k * inner);

  if (Rational(static_cast<std::int64_t>(chosen.size())) >= alpha * k * Rational(n)) {
    for (int e = 0; e < h.edge_count(); ++e) {
      if (!in_first[e] && unite_edge(sets, h.edges[e])) chosen.push_back(e);
    }
  } else {
    std::vector<int> label(n, -1);
    int parts = 0;
    for (int v = 0; v < n; ++v) {
      int root = sets.find(v);
      if (label[root] < 0) label[root] = parts++;
      label[v] = label[root];
    }
    Level level;
    level.graph.vertex_count = parts;
    for (int e = 0; e < h.edge_count(); ++e) {
      if (in_first[e]) continue;
      std::vector<int> image;
      for (int v : h.edges[e]) image.push_back(label[v]);
      level.graph.edges.push_back(image);
      level.origin.push_back(e);
    }
    level.graph = Hypergraph(parts, std::move(level.graph.edges));
    if (level.graph.rank() > reduced) {
      throw InternalError("contracted edge meets " + std::to_string(level.graph.rank()) + " parts, expected <= " +
                          std::to_string(reduced));
    }
    for (int e : spanning_recursive(level.graph, reduced)) chosen.push_back(level.origin[e]);
  }
  std::sort(chosen.begin(), chosen.end());
  if (!spans_connected(h, chosen)) throw InternalError("spanning set is not connected");
  const Rational bound = (1 - epsilon(d)) * Rational(h.edge_count());
  if (Rational(static_cast<std::int64_t>(chosen.size())) > bound) {
    throw InternalError("spanning set has " + std::to_string(chosen.size()) + " edges, bound " + to_string(bound));
  }
  return chosen;
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edge_list) : vertex_count(n), edges(std::move(edge_list)) {
  for (auto& e : edges) {
    for (int v : e) {
      if (v < 0 || v >= n) throw PreconditionError("hyperedge vertex " + std::to_string(v) + " out of range");
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) throw PreconditionError("hyperedge is empty");
  }
}

int Hypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& e : edges) r = std::max(r, e.size());
  return static_cast<int>(r);
}

bool is_k_edge_connected(const Hypergraph& h, int k) {
  if (h.vertex_count <= 1 || k <= 0) return true;
  EdgeSplitFlow network(h);
  for (int t = 1; t < h.vertex_count; ++t) {
    if (network.flow(0, t, k) < k) return false;
  }
  return true;
}

bool spans_connected(const Hypergraph& h, const std::vector<int>& chosen) {
  if (h.vertex_count <= 1) return true;
  DisjointSets sets(h.vertex_count);
  for (int e : chosen) unite_edge(sets, h.edges[e]);
  return sets.count() == 1;
}

Rational epsilon(int d) {
  if (d < 2) throw PreconditionError("edge size bound must be at least 2");
  if (d == 2) return Rational(1, 3);
  const Rational inner = epsilon((d + 5) / 3);
  return 3 * inner / (d + 3 * inner);
}

std::vector<int> hypergraph_spanning_set(const Hypergraph& h, int d) {
  if (d < 2) throw PreconditionError("edge size bound must be at least 2");
  if (h.rank() > d) {
    throw PreconditionError("hypergraph has an edge of size " + std::to_string(h.rank()) + " > " + std::to_string(d));
  }
  if (!is_k_edge_connected(h, 3)) throw PreconditionError("hypergraph is not 3-edge-connected");
  if (h.vertex_count >= 2 && Rational(h.edge_count()) < Rational(3 * h.vertex_count, d)) {
    throw InternalError("3-edge-connected hypergraph has fewer than 3n/d edges");
  }
  return spanning_recursive(h, d);
}

}  // namespace flexicolor::degeneracy

#include "flexicolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace flexicolor::oracle {

namespace {

void check_budget(const ListAssignment& lists, std::int64_t budget) {
  std::int64_t product = 1;
  for (Vertex v = 0; v < lists.size(); ++v) {
    const std::int64_t s = lists.list_size(v);
    if (s == 0) return;  // nothing to enumerate
    if (product > budget / s) {
      throw BudgetExceeded("product of list sizes exceeds the oracle budget " + std::to_string(budget));
    }
    product *= s;
  }
}

class Search {
 public:
  Search(const Graph& g, const ListAssignment& lists, const Request* request)
      : g_(g), lists_(lists), order_(g.size()), coloring_(g.size(), kNoColor), gain_(g.size()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return lists.list_size(a) < lists.list_size(b); });
    if (request) {
      for (const auto& e : request->entries()) gain_[e.vertex].emplace_back(e.color, e.weight);
    }
    // Remaining-color counters for the forward check.
    available_.resize(g.size());
    blocked_.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
      available_[v] = lists.list_size(v);
      blocked_[v].assign(lists.list_size(v), 0);
    }
  }

  void run(bool stop_at_first) {
    stop_ = stop_at_first;
    if (std::any_of(available_.begin(), available_.end(), [](int a) { return a == 0; })) return;
    descend(0, 0);
  }

  OracleResult result;

 private:
  int slot(Vertex v, Color c) const {
    auto list = lists_[v];
    auto it = std::lower_bound(list.begin(), list.end(), c);
    return it != list.end() && *it == c ? static_cast<int>(it - list.begin()) : -1;
  }

  Weight gain(Vertex v, Color c) const {
    for (auto [color, w] : gain_[v]) {
      if (color == c) return w;
    }
    return 0;
  }

  // Returns false when some uncolored neighbour runs out of colors.
  bool block(Vertex v, Color c, int delta) {
    bool ok = true;
    for (Vertex u : g_.neighbors(v)) {
      if (coloring_[u] != kNoColor) continue;
      int s = slot(u, c);
      if (s < 0) continue;
      if (delta > 0 && blocked_[u][s]++ == 0) ok &= --available_[u] > 0;
      if (delta < 0 && --blocked_[u][s] == 0) ++available_[u];
    }
    return ok;
  }

  bool descend(std::size_t depth, Weight value) {
    if (depth == order_.size()) {
      ++result.colorings_enumerated;
      if (!result.witness || value > result.optimum) {
        result.optimum = value;
        result.witness = coloring_;
      }
      return stop_;
    }
    const Vertex v = order_[depth];
    auto list = lists_[v];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (blocked_[v][i]) continue;
      const Color c = list[i];
      coloring_[v] = c;
      bool ok = block(v, c, +1);
      bool done = ok && descend(depth + 1, value + gain(v, c));
      block(v, c, -1);
      coloring_[v] = kNoColor;
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  const ListAssignment& lists_;
  std::vector<Vertex> order_;
  Coloring coloring_;
  std::vector<std::vector<std::pair<Color, Weight>>> gain_;
  std::vector<int> available_;
  std::vector<std::vector<int>> blocked_;
  bool stop_ = false;
};

bool same_block(const Graph& g, const Edge& e, const Edge& f) {
  if (e == f) return true;
  std::vector<bool> removed(g.size(), false);
  for (Vertex x = 0; x < g.size(); ++x) {
    removed[x] = true;
    Vertex a = e.first == x ? e.second : e.first;
    Vertex b = f.first == x ? f.second : f.first;
    auto dist = bfs_distances(g, a, removed);
    removed[x] = false;
    if (dist[b] < 0) return false;
  }
  return true;
}

bool is_clique_or_odd_cycle(const Graph& g, const std::vector<Vertex>& vertices, int edge_count) {
  const int k = static_cast<int>(vertices.size());
  if (edge_count == k * (k - 1) / 2) return true;
  if (k % 2 == 0 || edge_count != k) return false;
  for (Vertex v : vertices) {
    int inside = 0;
    for (Vertex u : g.neighbors(v)) inside += std::binary_search(vertices.begin(), vertices.end(), u);
    if (inside != 2) return false;
  }
  return true;
}

}  // namespace

OracleResult optimal_satisfaction(const Graph& g, const ListAssignment& lists, const Request& request,
                                  std::int64_t budget) {
  lists.validate(g);
  request.validate(lists);
  check_budget(lists, budget);
  Search search(g, lists, &request);
  search.run(false);
  return std::move(search.result);
}

bool is_degree_choosable_here(const Graph& g, const ListAssignment& lists, std::int64_t budget) {
  lists.validate(g);
  check_budget(lists, budget);
  Search search(g, lists, nullptr);
  search.run(true);
  return search.result.witness.has_value();
}

bool bruteforce_bad_component(const Graph& g, const ListAssignment& lists) {
  if (g.size() == 0 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (lists.list_size(v) != g.degree(v)) return false;
  }
  const auto& edges = g.edges();
  const int m = g.edge_count();
  std::vector<int> group(m, -1);
  int groups = 0;
  for (int i = 0; i < m; ++i) {
    if (group[i] >= 0) continue;
    group[i] = groups;
    for (int j = i + 1; j < m; ++j) {
      if (group[j] < 0 && same_block(g, edges[i], edges[j])) group[j] = groups;
    }
    ++groups;
  }
  for (int b = 0; b < groups; ++b) {
    std::vector<Vertex> vertices;
    int count = 0;
    for (int i = 0; i < m; ++i) {
      if (group[i] != b) continue;
      ++count;
      vertices.push_back(edges[i].first);
      vertices.push_back(edges[i].second);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (!is_clique_or_odd_cycle(g, vertices, count)) return false;
  }
  return true;
}

}  // namespace flexicolor::oracle

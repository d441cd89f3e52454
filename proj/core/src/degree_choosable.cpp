#include "flexicolor/degree_choosable.hpp"

#include <algorithm>
#include <string>

#include "flexicolor/blocks.hpp"

namespace flexicolor {

namespace {

bool available(const Graph& g, const Coloring& color, Vertex v, Color c) {
  for (Vertex w : g.neighbors(v)) {
    if (color[w] == c) return false;
  }
  return true;
}

std::optional<Coloring> greedy_from(const Graph& g, const ListAssignment& lists, Vertex root) {
  auto dist = bfs_distances(g, root);
  std::vector<Vertex> order(g.size());
  for (Vertex v = 0; v < g.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] > dist[b]; });
  Coloring color(g.size(), kNoColor);
  for (Vertex v : order) {
    for (Color c : lists[v]) {
      if (available(g, color, v, c)) {
        color[v] = c;
        break;
      }
    }
    if (color[v] == kNoColor) throw InternalError("greedy step found no free color at vertex " + std::to_string(v));
  }
  return color;
}

class Backtracker {
 public:
  Backtracker(const Graph& g, const ListAssignment& lists, std::int64_t budget)
      : g_(g), lists_(lists), budget_(budget), color_(g.size(), kNoColor) {}

  std::optional<Coloring> run() {
    if (search(0)) return color_;
    return std::nullopt;
  }

 private:
  int options_at(Vertex v) const {
    int count = 0;
    for (Color c : lists_[v]) count += available(g_, color_, v, c);
    return count;
  }

  bool search(int colored) {
    if (colored == g_.size()) return true;
    if (++nodes_ > budget_) {
      throw BudgetExceeded("list coloring search exceeded " + std::to_string(budget_) + " nodes");
    }
    Vertex pick = -1;
    int fewest = 0;
    for (Vertex v = 0; v < g_.size(); ++v) {
      if (color_[v] != kNoColor) continue;
      int k = options_at(v);
      if (k == 0) return false;
      if (pick < 0 || k < fewest) {
        pick = v;
        fewest = k;
      }
    }
    for (Color c : lists_[pick]) {
      if (!available(g_, color_, pick, c)) continue;
      color_[pick] = c;
      if (search(colored + 1)) return true;
    }
    color_[pick] = kNoColor;
    return false;
  }

  const Graph& g_;
  const ListAssignment& lists_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  Coloring color_;
};

std::optional<Coloring> color_component(const Graph& g, const ListAssignment& lists,
                                        const DegreeChoosableOptions& options) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (lists.list_size(v) > g.degree(v)) return greedy_from(g, lists, v);
  }
  if (is_tight_gallai(g, lists) && g.size() > options.exhaustive_cap) {
    throw BudgetExceeded("tight component of " + std::to_string(g.size()) +
                         " vertices exceeds the exhaustive cap " + std::to_string(options.exhaustive_cap));
  }
  return backtrack_list_coloring(g, lists, options.node_budget);
}

}  // namespace

bool is_tight_gallai(const Graph& g, const ListAssignment& lists) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (lists.list_size(v) != g.degree(v)) return false;
  }
  auto tree = block_cut_tree(g);
  return std::all_of(tree.blocks.begin(), tree.blocks.end(),
                     [](const Block& b) { return b.kind != BlockKind::Other; });
}

std::optional<Coloring> backtrack_list_coloring(const Graph& g, const ListAssignment& lists,
                                                std::int64_t node_budget) {
  return Backtracker(g, lists, node_budget).run();
}

std::optional<Coloring> degree_choosable_coloring(const Graph& g, const ListAssignment& lists,
                                                  const DegreeChoosableOptions& options) {
  if (lists.size() != g.size()) throw PreconditionError("list assignment does not match the graph");
  for (Vertex v = 0; v < g.size(); ++v) {
    if (lists.list_size(v) < g.degree(v)) {
      throw PreconditionError("vertex " + std::to_string(v) + " has list size " +
                              std::to_string(lists.list_size(v)) + " below its degree " +
                              std::to_string(g.degree(v)));
    }
  }
  Coloring out(g.size(), kNoColor);
  for (const auto& part : components(g)) {
    auto sub = induced_subgraph(g, part);
    auto local = color_component(sub.graph, lists.restrict_to(part), options);
    if (!local) return std::nullopt;
    for (std::size_t i = 0; i < part.size(); ++i) out[part[i]] = (*local)[i];
  }
  return out;
}

ExtensionResult precolor_and_extend(const Graph& g, const ListAssignment& lists,
                                    std::span<const std::pair<Vertex, Color>> fixed,
                                    const DegreeChoosableOptions& options) {
  if (lists.size() != g.size()) throw PreconditionError("list assignment does not match the graph");
  Coloring color(g.size(), kNoColor);
  std::vector<bool> removed(g.size(), false);
  for (auto [v, c] : fixed) {
    if (!g.contains(v)) throw PreconditionError("fixed vertex " + std::to_string(v) + " out of range");
    if (removed[v]) throw PreconditionError("vertex " + std::to_string(v) + " fixed twice");
    if (!lists.contains(v, c)) {
      throw PreconditionError("fixed color " + std::to_string(c) + " is not in the list of vertex " +
                              std::to_string(v));
    }
    removed[v] = true;
    color[v] = c;
  }
  for (auto [v, c] : fixed) {
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) {
        throw PreconditionError("fixed vertices " + std::to_string(std::min(v, w)) + " and " +
                                std::to_string(std::max(v, w)) + " are adjacent");
      }
    }
  }
  ExtensionResult result;
  for (const auto& part : components(g, removed)) {
    auto sub = induced_subgraph(g, part);
    ListAssignment pruned = lists.restrict_to(part);
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (Vertex w : g.neighbors(part[i])) {
        if (removed[w]) pruned.erase(static_cast<Vertex>(i), color[w]);
      }
    }
    auto local = degree_choosable_coloring(sub.graph, pruned, options);
    if (!local) {
      result.infeasible_component = part;
      return result;
    }
    for (std::size_t i = 0; i < part.size(); ++i) color[part[i]] = (*local)[i];
  }
  result.coloring = std::move(color);
  return result;
}

}  // namespace flexicolor

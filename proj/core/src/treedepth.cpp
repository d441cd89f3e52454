#include "flexicolor/treedepth.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace flexicolor::treedepth {

namespace {

void require_unique(const Request& request) {
  if (request.kind() == RequestKind::Weighted) {
    throw PreconditionError("request must name at most one color per vertex; reduce weighted requests first");
  }
}

/// Strike `used` from the list; if the list did not shrink below `level`,
/// drop its largest color other than `keep`.
void shrink(std::vector<Color>& list, Color used, std::size_t level, Color keep) {
  auto it = std::find(list.begin(), list.end(), used);
  if (it != list.end()) list.erase(it);
  if (list.size() < level) return;
  for (auto rit = list.rbegin(); rit != list.rend(); ++rit) {
    if (*rit != keep) {
      list.erase(std::next(rit).base());
      return;
    }
  }
}

class Walker {
 public:
  Walker(const TdInstance& inst, const Request& request, std::int64_t budget)
      : inst_(inst),
        preferred_(request.preferred(inst.graph.size())),
        weights_(request.vertex_weights(inst.graph.size())),
        lists_(trimmed_lists(inst, request).lists()),
        children_(inst.forest.children()),
        budget_(budget) {}

  const std::vector<std::vector<Color>>& lists() const { return lists_; }
  const std::vector<std::vector<Vertex>>& children() const { return children_; }

  /// Probability that the last vertex of `path` gets `target`, where path runs
  /// down the forest from a subtree root and `lists` hold the current lists.
  Rational path_probability(const std::vector<Vertex>& path, std::size_t from,
                            std::vector<std::vector<Color>> lists, Color target) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("probability enumeration exceeded " + std::to_string(budget_) + " nodes");
    }
    const auto& here = lists[from];
    if (from + 1 == path.size()) {
      bool has = std::find(here.begin(), here.end(), target) != here.end();
      return has ? Rational(1, static_cast<std::int64_t>(here.size())) : Rational(0);
    }
    Rational sum(0);
    const std::size_t level = here.size();
    for (Color x : here) {
      auto next = lists;
      for (std::size_t j = from + 1; j < path.size(); ++j) shrink(next[j], x, level, preferred_[path[j]]);
      sum += path_probability(path, from + 1, std::move(next), target);
    }
    return sum / Rational(static_cast<std::int64_t>(level));
  }

  /// Probability for v given the current global lists, counting only the
  /// part of the root path at or below `top`.
  Rational probability_below(Vertex top, Vertex v, Color target) {
    std::vector<Vertex> path;
    for (Vertex u = v;; u = inst_.forest.parent[u]) {
      path.push_back(u);
      if (u == top) break;
    }
    std::reverse(path.begin(), path.end());
    std::vector<std::vector<Color>> lists;
    for (Vertex u : path) lists.push_back(lists_[u]);
    return path_probability(path, 0, std::move(lists), target);
  }

  /// Color `root`, then shrink every list strictly below it.
  void fix(Vertex root, Color x, Coloring& out) {
    out[root] = x;
    const std::size_t level = lists_[root].size();
    auto below = inst_.forest.subtree(root);
    for (std::size_t i = 1; i < below.size(); ++i) shrink(lists_[below[i]], x, level, preferred_[below[i]]);
  }

  Color choose_best(Vertex root) {
    Color best = kNoColor;
    Rational best_value(-1);
    auto below = inst_.forest.subtree(root);
    const auto saved = lists_;
    for (Color x : saved[root]) {
      Coloring scratch(inst_.graph.size(), kNoColor);
      fix(root, x, scratch);
      Rational value(preferred_[root] == x ? weights_[root] : 0);
      for (std::size_t i = 1; i < below.size(); ++i) {
        const Vertex u = below[i];
        if (weights_[u] == 0) continue;
        // the chain restarts at the child of root on the way to u
        Vertex top = u;
        while (inst_.forest.parent[top] != root) top = inst_.forest.parent[top];
        value += Rational(weights_[u]) * probability_below(top, u, preferred_[u]);
      }
      lists_ = saved;
      if (value > best_value) {
        best_value = value;
        best = x;
      }
    }
    return best;
  }

  const std::vector<Color>& preferred() const { return preferred_; }
  const std::vector<Weight>& weights() const { return weights_; }

 private:
  const TdInstance& inst_;
  std::vector<Color> preferred_;
  std::vector<Weight> weights_;
  std::vector<std::vector<Color>> lists_;
  std::vector<std::vector<Vertex>> children_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
};

/// Preorder over the whole forest, children by id.
std::vector<Vertex> forest_preorder(const TreedepthForest& forest) {
  std::vector<Vertex> order;
  for (Vertex r : forest.roots()) {
    auto part = forest.subtree(r);
    order.insert(order.end(), part.begin(), part.end());
  }
  return order;
}

}  // namespace

void validate(const TdInstance& inst) {
  if (inst.k < 1) throw PreconditionError("treedepth bound must be positive");
  if (auto bad = validate_treedepth(inst.graph, inst.forest, inst.k)) throw PreconditionError(*bad);
  if (inst.lists.size() != inst.graph.size()) throw PreconditionError("list assignment does not match the graph");
  for (Vertex v = 0; v < inst.graph.size(); ++v) {
    if (inst.lists.list_size(v) < inst.k) {
      throw PreconditionError("vertex " + std::to_string(v) + " has a list of size " +
                              std::to_string(inst.lists.list_size(v)) + ", needs " + std::to_string(inst.k));
    }
  }
}

ListAssignment trimmed_lists(const TdInstance& inst, const Request& request) {
  validate(inst);
  require_unique(request);
  request.validate(inst.lists);
  const auto preferred = request.preferred(inst.graph.size());
  std::vector<std::vector<Color>> out;
  for (Vertex v = 0; v < inst.graph.size(); ++v) {
    std::vector<Color> list;
    if (preferred[v] != kNoColor) list.push_back(preferred[v]);
    for (Color c : inst.lists[v]) {
      if (static_cast<int>(list.size()) == inst.k) break;
      if (c != preferred[v]) list.push_back(c);
    }
    out.push_back(std::move(list));
  }
  return ListAssignment(std::move(out));
}

Coloring sample_coloring(const TdInstance& inst, const Request& request, std::uint64_t seed) {
  Walker walker(inst, request, 0);
  std::mt19937_64 rng(seed);
  Coloring out(inst.graph.size(), kNoColor);
  for (Vertex v : forest_preorder(inst.forest)) {
    const auto& list = walker.lists()[v];
    std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
    walker.fix(v, list[pick(rng)], out);
  }
  return out;
}

Rational exact_request_probability(const TdInstance& inst, const Request& request, Vertex v, Color c,
                                   std::int64_t node_budget) {
  if (!inst.graph.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  if (!inst.lists.contains(v, c)) {
    throw PreconditionError("color " + std::to_string(c) + " is not in the list of vertex " + std::to_string(v));
  }
  Walker walker(inst, request, node_budget);
  Vertex root = v;
  while (inst.forest.parent[root] != -1) root = inst.forest.parent[root];
  return walker.probability_below(root, v, c);
}

Rational expected_satisfied_weight(const TdInstance& inst, const Request& request, std::int64_t node_budget) {
  Rational total(0);
  for (const auto& e : request.entries()) {
    total += Rational(e.weight) * exact_request_probability(inst, request, e.vertex, e.color, node_budget);
  }
  return total;
}

Coloring derandomized_coloring(const TdInstance& inst, const Request& request, std::int64_t node_budget) {
  Walker walker(inst, request, node_budget);
  Coloring out(inst.graph.size(), kNoColor);
  for (Vertex v : forest_preorder(inst.forest)) walker.fix(v, walker.choose_best(v), out);
  return out;
}

}  // namespace flexicolor::treedepth

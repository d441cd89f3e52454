#include "flexicolor/treewidth.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace flexicolor::treewidth {

namespace {

std::vector<Coloring> pair_members_forest(const Graph& g, const ListAssignment& lists) {
  const int n = g.size();
  std::vector<Coloring> members(2, Coloring(n, kNoColor));
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    members[0][root] = lists[root][0];
    members[1][root] = lists[root][1];
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex p = queue[head];
      for (Vertex c : g.neighbors(p)) {
        if (seen[c]) continue;
        seen[c] = true;
        Color a = lists[c][0], b = lists[c][1];
        if (a == members[0][p] || b == members[1][p]) std::swap(a, b);
        members[0][c] = a;
        members[1][c] = b;
        queue.push_back(c);
      }
    }
  }
  return members;
}

void require_list_size(const ListAssignment& lists, int n, int size) {
  if (lists.size() != n) throw PreconditionError("list assignment does not match the graph");
  for (Vertex v = 0; v < n; ++v) {
    if (lists.list_size(v) != size) {
      throw PreconditionError("vertex " + std::to_string(v) + " has a list of size " +
                              std::to_string(lists.list_size(v)) + ", expected " + std::to_string(size));
    }
  }
}

SixColors column(const std::vector<Coloring>& members, Vertex v) {
  SixColors out{};
  for (int i = 0; i < 6; ++i) out[i] = members[i][v];
  return out;
}

std::vector<Coloring> two_tree_members(const Graph& g, const KTreeOrder& order, const ListAssignment& lists) {
  const int n = g.size();
  std::vector<Coloring> members(6, Coloring(n, kNoColor));
  if (n == 0) return members;
  const auto& seq = order.sequence;
  if (n == 1) {
    // a lone vertex: each color twice
    for (int i = 0; i < 6; ++i) members[i][seq[0]] = lists[seq[0]][i / 2];
    return members;
  }
  auto [at_u, at_v] = seed_pair(lists[seq[0]], lists[seq[1]]);
  for (int i = 0; i < 6; ++i) {
    members[i][seq[0]] = at_u[i];
    members[i][seq[1]] = at_v[i];
  }
  auto back = back_neighbors(g, order);
  for (std::size_t idx = 2; idx < seq.size(); ++idx) {
    const Vertex w = seq[idx];
    const Vertex u = back[w][0], v = back[w][1];
    auto at_w = extend_phi(column(members, u), column(members, v), lists[u], lists[v], lists[w]);
    for (int i = 0; i < 6; ++i) members[i][w] = at_w[i];
  }
  return members;
}

/// Family of a width-0, 1 or 2 k-tree whose lists have size width + 1.
std::vector<Coloring> base_members(const Graph& g, const KTreeOrder& order, const ListAssignment& lists) {
  switch (order.width) {
    case 0: {
      Coloring c(g.size());
      for (Vertex v = 0; v < g.size(); ++v) c[v] = lists[v][0];
      return {c};
    }
    case 1:
      return pair_members_forest(g, lists);
    case 2:
      return two_tree_members(g, order, lists);
    default:
      throw InternalError("base family requested for width " + std::to_string(order.width));
  }
}

struct ClassMap {
  std::map<Color, int> of;

  ListAssignment filter(const ListAssignment& lists, std::span<const Vertex> vertices, int lo, int hi) const {
    std::vector<std::vector<Color>> out;
    out.reserve(vertices.size());
    for (Vertex v : vertices) {
      std::vector<Color> list;
      for (Color c : lists[v]) {
        int cls = of.at(c);
        if (cls >= lo && cls < hi) list.push_back(c);
      }
      out.push_back(std::move(list));
    }
    return ListAssignment(std::move(out));
  }
};

std::vector<Coloring> lambda_members(const Graph& g, const KTreeOrder& order, std::span<const int> parts,
                                     const ClassMap& classes, const ListAssignment& lists) {
  const int t = static_cast<int>(parts.size());
  if (t == 1) return base_members(g, order, lists);
  const int k = order.width;
  const int top = parts.back();
  const int n = g.size();
  std::vector<Coloring> out;
  for (int size : {k - top + 1, k - top}) {
    std::vector<bool> pick(k, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    // prev_permutation on a true-first mask walks subsets in lexicographic order
    do {
      std::vector<Vertex> start;
      for (int i = 0; i < k; ++i) {
        if (pick[i]) start.push_back(order.sequence[i]);
      }
      auto in_s_sorted = build_SA(g, order, start, top);
      std::vector<bool> in_s(n, false);
      for (Vertex v : in_s_sorted) in_s[v] = true;
      std::vector<Vertex> first_seq, second_seq;
      for (Vertex v : order.sequence) (in_s[v] ? first_seq : second_seq).push_back(v);

      auto first = induced_subgraph(g, first_seq);
      KTreeOrder first_order{k - top, std::vector<Vertex>(first_seq.size())};
      std::iota(first_order.sequence.begin(), first_order.sequence.end(), 0);
      auto first_family = lambda_members(first.graph, first_order, parts.first(t - 1), classes,
                                         classes.filter(lists, first_seq, 0, t - 1));

      auto second = induced_subgraph(g, second_seq);
      KTreeOrder second_order{top - 1, std::vector<Vertex>(second_seq.size())};
      std::iota(second_order.sequence.begin(), second_order.sequence.end(), 0);
      auto second_family =
          base_members(second.graph, second_order, classes.filter(lists, second_seq, t - 1, t));

      for (const auto& a : first_family) {
        for (const auto& b : second_family) {
          Coloring c(n, kNoColor);
          for (std::size_t i = 0; i < first_seq.size(); ++i) c[first_seq[i]] = a[i];
          for (std::size_t i = 0; i < second_seq.size(); ++i) c[second_seq[i]] = b[i];
          out.push_back(std::move(c));
        }
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace

void verify_family(const Graph& g, const ListAssignment& lists, const ColoringFamily& family) {
  for (const auto& member : family.members) check_list_coloring(g, lists, member);
  for (Vertex v = 0; v < g.size(); ++v) {
    std::map<Color, int> count;
    for (const auto& member : family.members) ++count[member[v]];
    for (Color c : lists[v]) {
      if (count[c] != family.multiplicity) {
        throw InvalidColoring("color " + std::to_string(c) + " appears " + std::to_string(count[c]) +
                              " times at vertex " + std::to_string(v) + ", expected " +
                              std::to_string(family.multiplicity));
      }
    }
  }
}

ColoringFamily tree_pair_family(const Graph& tree, const ListAssignment& lists) {
  if (!is_tree(tree)) throw PreconditionError("graph is not a tree");
  require_list_size(lists, tree.size(), 2);
  return {pair_members_forest(tree, lists), 1};
}

bool admissible_at(const SixColors& at_u, const SixColors& at_v, std::span<const Color> list_u,
                   std::span<const Color> list_v) {
  for (int i = 0; i < 6; ++i) {
    if (at_u[i] == at_v[i]) return false;
    for (int j = 0; j < i; ++j) {
      if (at_u[i] == at_u[j] && at_v[i] == at_v[j]) return false;
    }
  }
  auto twice_each = [](const SixColors& at, std::span<const Color> list) {
    for (Color c : at) {
      if (std::find(list.begin(), list.end(), c) == list.end()) return false;
    }
    for (Color c : list) {
      if (std::count(at.begin(), at.end(), c) != 2) return false;
    }
    return true;
  };
  return twice_each(at_u, list_u) && twice_each(at_v, list_v);
}

std::pair<SixColors, SixColors> seed_pair(std::span<const Color> list_u, std::span<const Color> list_v) {
  std::vector<std::pair<Color, Color>> pairs;
  for (Color a : list_u) {
    for (Color b : list_v) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  if (pairs.size() >= 6) {
    std::vector<bool> pick(pairs.size(), false);
    std::fill(pick.begin(), pick.begin() + 6, true);
    do {
      SixColors at_u{}, at_v{};
      int i = 0;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (!pick[p]) continue;
        at_u[i] = pairs[p].first;
        at_v[i] = pairs[p].second;
        ++i;
      }
      if (admissible_at(at_u, at_v, list_u, list_v)) return {at_u, at_v};
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw PreconditionError("no admissible six-coloring of an edge with these lists");
}

SixColors extend_phi(const SixColors& at_u, const SixColors& at_v, std::span<const Color> list_u,
                     std::span<const Color> list_v, std::span<const Color> list_w) {
  if (list_w.size() != 3) throw PreconditionError("the new vertex needs a list of size 3");
  if (!admissible_at(at_u, at_v, list_u, list_v)) {
    throw PreconditionError("the family is not admissible at the base edge");
  }
  SixColors at_w{list_w[0], list_w[0], list_w[1], list_w[1], list_w[2], list_w[2]};
  std::sort(at_w.begin(), at_w.end());
  do {
    if (admissible_at(at_u, at_w, list_u, list_w) && admissible_at(at_v, at_w, list_v, list_w)) return at_w;
  } while (std::next_permutation(at_w.begin(), at_w.end()));
  throw InternalError("no admissible extension of the six colorings exists");
}

ColoringFamily two_tree_family(const Graph& g, const KTreeOrder& order, const ListAssignment& lists) {
  if (order.width != 2) throw PreconditionError("order width must be 2");
  if (auto bad = validate_ktree_order(g, order)) {
    throw PreconditionError("invalid 2-tree order at index " + std::to_string(bad->index) + ": " + bad->reason);
  }
  require_list_size(lists, g.size(), 3);
  return {two_tree_members(g, order, lists), 2};
}

std::vector<Vertex> build_SA(const Graph& g, const KTreeOrder& order, std::span<const Vertex> start,
                             int top_part) {
  const int k = order.width;
  if (top_part < 1 || top_part > k) {
    throw PreconditionError("top part " + std::to_string(top_part) + " outside 1.." + std::to_string(k));
  }
  const int low = k - top_part;
  if (static_cast<int>(start.size()) != low && static_cast<int>(start.size()) != low + 1) {
    throw PreconditionError("start set has size " + std::to_string(start.size()) + ", expected " +
                            std::to_string(low) + " or " + std::to_string(low + 1));
  }
  std::vector<bool> in_s(g.size(), false);
  for (Vertex v : start) {
    auto head_end = order.sequence.begin() + std::min<std::size_t>(k, order.sequence.size());
    if (std::find(order.sequence.begin(), head_end, v) == head_end) {
      throw PreconditionError("start vertex " + std::to_string(v) + " is not among the first " + std::to_string(k));
    }
    if (in_s[v]) throw PreconditionError("start vertex " + std::to_string(v) + " repeated");
    in_s[v] = true;
  }
  auto back = back_neighbors(g, order);
  for (std::size_t i = k; i < order.sequence.size(); ++i) {
    const Vertex v = order.sequence[i];
    int inside = 0;
    for (Vertex w : back[v]) inside += in_s[w];
    if (inside == low) in_s[v] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (in_s[v]) out.push_back(v);
  }
  return out;
}

void validate_lambda(const Graph& g, const KTreeOrder& order, const LambdaAssignment& lambda,
                     const ListAssignment& lists) {
  if (auto bad = validate_ktree_order(g, order)) {
    throw PreconditionError("invalid k-tree order at index " + std::to_string(bad->index) + ": " + bad->reason);
  }
  if (lambda.parts.empty()) throw PreconditionError("partition is empty");
  if (lambda.parts.size() != lambda.classes.size()) {
    throw PreconditionError("partition has " + std::to_string(lambda.parts.size()) + " parts but " +
                            std::to_string(lambda.classes.size()) + " color classes");
  }
  int sum = 0;
  for (int p : lambda.parts) {
    if (p < 1) throw PreconditionError("partition parts must be positive");
    if (p > 3) {
      throw PreconditionError("part " + std::to_string(p) +
                              " exceeds 3: flexibility of k-trees with (k+1)-lists is open for k >= 3");
    }
    sum += p;
  }
  if (sum != order.width + 1) {
    throw PreconditionError("partition sums to " + std::to_string(sum) + ", expected width + 1 = " +
                            std::to_string(order.width + 1));
  }
  std::map<Color, int> class_of;
  for (std::size_t i = 0; i < lambda.classes.size(); ++i) {
    for (Color c : lambda.classes[i]) {
      if (!class_of.emplace(c, static_cast<int>(i)).second) {
        throw PreconditionError("color " + std::to_string(c) + " lies in two classes");
      }
    }
  }
  if (lists.size() != g.size()) throw PreconditionError("list assignment does not match the graph");
  for (Vertex v = 0; v < g.size(); ++v) {
    std::vector<int> count(lambda.parts.size(), 0);
    for (Color c : lists[v]) {
      auto it = class_of.find(c);
      if (it == class_of.end()) {
        throw PreconditionError("color " + std::to_string(c) + " at vertex " + std::to_string(v) +
                                " belongs to no class");
      }
      ++count[it->second];
    }
    for (std::size_t i = 0; i < count.size(); ++i) {
      if (count[i] != lambda.parts[i]) {
        throw PreconditionError("vertex " + std::to_string(v) + " has " + std::to_string(count[i]) +
                                " colors from class " + std::to_string(i) + ", expected " +
                                std::to_string(lambda.parts[i]));
      }
    }
  }
}

ColoringFamily lambda_family(const Graph& g, const KTreeOrder& order, const LambdaAssignment& lambda,
                             const ListAssignment& lists, std::int64_t size_cap) {
  validate_lambda(g, order, lambda, lists);
  const int k = order.width;
  std::int64_t size = 1, multiplicity = 1;
  for (int i = 2; i <= k + 1; ++i) {
    size *= i;
    if (i <= k) multiplicity *= i;
    if (size > size_cap) {
      throw BudgetExceeded("family of (k+1)! members exceeds the cap " + std::to_string(size_cap));
    }
  }
  ClassMap classes;
  for (std::size_t i = 0; i < lambda.classes.size(); ++i) {
    for (Color c : lambda.classes[i]) classes.of[c] = static_cast<int>(i);
  }
  ColoringFamily family{lambda_members(g, order, lambda.parts, classes, lists), static_cast<int>(multiplicity)};
  if (static_cast<std::int64_t>(family.size()) != size) {
    throw InternalError("family has " + std::to_string(family.size()) + " members, expected " +
                        std::to_string(size));
  }
  return family;
}

BestMember best_of_family(const Graph& g, const ListAssignment& lists, const ColoringFamily& family,
                          const Request& request) {
  if (family.members.empty()) throw PreconditionError("family is empty");
  BestMember best;
  for (std::size_t i = 0; i < family.size(); ++i) {
    Weight s = satisfied_amount(g, lists, family.members[i], request);
    if (i == 0 || s > best.satisfied) best = {i, s};
  }
  return best;
}

}  // namespace flexicolor::treewidth

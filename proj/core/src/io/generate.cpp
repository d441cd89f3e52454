#include "flexicolor/io/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "flexicolor/oracle.hpp"

namespace flexicolor::io {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Color> iota_colors(int from, int to) {
  std::vector<Color> out;
  for (Color c = from; c <= to; ++c) out.push_back(c);
  return out;
}

std::vector<Color> sample_colors(std::vector<Color> palette, int count, std::mt19937_64& rng) {
  std::shuffle(palette.begin(), palette.end(), rng);
  palette.resize(count);
  std::sort(palette.begin(), palette.end());
  return palette;
}

Request random_request(const ListAssignment& lists, RequestShape shape, std::mt19937_64& rng) {
  const int n = lists.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(uniform(rng, 0, n));
  std::vector<RequestEntry> entries;
  for (Vertex v : order) {
    auto list = lists[v];
    if (list.empty()) continue;
    if (shape == RequestShape::Weighted) {
      std::vector<Color> colors(list.begin(), list.end());
      for (Color c : sample_colors(colors, uniform(rng, 1, static_cast<int>(colors.size())), rng)) {
        entries.push_back({v, c, uniform(rng, 0, 100)});
      }
    } else {
      Color c = list[uniform(rng, 0, static_cast<int>(list.size()) - 1)];
      entries.push_back({v, c, shape == RequestShape::Unique ? uniform(rng, 1, 100) : 1});
    }
  }
  auto kind = shape == RequestShape::Unweighted ? RequestKind::Unweighted
              : shape == RequestShape::Unique   ? RequestKind::UniquelyWeighted
                                                : RequestKind::Weighted;
  return Request(kind, std::move(entries));
}

Request uniform_request(std::span<const Vertex> vertices, Color c) {
  std::vector<RequestEntry> entries;
  for (Vertex v : vertices) entries.push_back({v, c, 1});
  return Request(RequestKind::Unweighted, std::move(entries));
}

Instance assemble(std::string name, int n, const std::vector<Edge>& edges) {
  Instance inst;
  inst.name = std::move(name);
  inst.graph = Graph(n, edges);
  inst.lists = ListAssignment(std::vector<std::vector<Color>>(n));
  return inst;
}

RequestShape shape_from(std::int64_t value) {
  if (value < 0 || value > 2) throw PreconditionError("request shape must be 0, 1 or 2");
  return static_cast<RequestShape>(value);
}

std::vector<int> digits(std::int64_t value) {
  std::vector<int> out;
  for (; value > 0; value /= 10) out.insert(out.begin(), static_cast<int>(value % 10));
  return out;
}

}  // namespace

std::int64_t FamilySpec::get(const std::string& key, std::int64_t fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

FamilySpec parse_family(const std::string& text) {
  FamilySpec spec;
  auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (colon == std::string::npos) return spec;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw PreconditionError("bad family parameter '" + item + "'");
    try {
      std::size_t used = 0;
      std::string value = item.substr(eq + 1);
      if (item.substr(0, eq) == "shape") {
        static const std::map<std::string, std::string> shapes = {{"unweighted", "0"}, {"unique", "1"}, {"weighted", "2"}};
        if (auto it = shapes.find(value); it != shapes.end()) value = it->second;
      }
      spec.params[item.substr(0, eq)] = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad family parameter '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return spec;
}

std::vector<std::string> family_names() {
  return {"fig1",          "fig2",          "fig3",         "fig4",           "fig5",
          "two-cliques-matching", "cube-chord", "bowtie",   "diamond",        "random-maxdeg",
          "random-2tree",  "random-ktree",  "random-treedepth", "random-3connected"};
}

Instance cycle_counterexample() {
  // Cycle order: 0 a2, 1 a, 2 c, 3 bb, 4 d, 5 b1, 6 b2, 7 f, 8 bbb, 9 e.
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) edges.emplace_back(std::min(i, (i + 1) % 10), std::max(i, (i + 1) % 10));
  Instance inst = assemble("fig1", 10, edges);
  std::vector<std::vector<Color>> lists = {{1, 2}, {2, 3}, {1, 3}, {1, 2}, {1, 2}, {}, {}, {1, 2}, {1, 2}, {1, 2}};
  const std::vector<std::pair<Vertex, Color>> fixed = {{0, 2}, {3, 1}, {4, 2}, {7, 1}, {8, 2}, {9, 1}};
  const std::vector<std::vector<Color>> pairs = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& l5 : pairs) {
    for (Color r5 : l5) {
      for (const auto& l6 : pairs) {
        for (Color r6 : l6) {
          lists[5] = l5;
          lists[6] = l6;
          std::vector<RequestEntry> entries;
          for (auto [v, c] : fixed) entries.push_back({v, c, 1});
          entries.push_back({5, r5, 1});
          entries.push_back({6, r6, 1});
          ListAssignment candidate(lists);
          Request request(RequestKind::Unweighted, entries);
          if (oracle::optimal_satisfaction(inst.graph, candidate, request).optimum == 0) {
            inst.lists = candidate;
            inst.request = request;
            return inst;
          }
        }
      }
    }
  }
  throw InternalError("no completion of the cycle keeps every request unsatisfiable");
}

Instance diamond_counterexample() {
  Instance inst = assemble("fig2", 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  inst.lists = ListAssignment({{1, 2}, {1, 2, 3}, {1, 2, 3}, {1, 3}});
  inst.request = Request(RequestKind::Unweighted, {{0, 2, 1}, {1, 1, 1}, {2, 1, 1}, {3, 3, 1}});
  return inst;
}

Instance three_tree_example() {
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4},
                             {1, 5}, {3, 5}, {4, 5}, {3, 6}, {4, 6}, {5, 6}, {3, 7}, {4, 7}, {5, 7}};
  Instance inst = assemble("fig3", 8, edges);
  inst.ktree = KTreeOrder{3, {0, 1, 2, 3, 4, 5, 6, 7}};
  inst.lists = ListAssignment::uniform(8, {1, 2, 3, 4});
  return inst;
}

Instance gadget_ring(int gadgets, int degree) {
  if (gadgets < 2 || degree < 3) throw PreconditionError("gadget ring needs >= 2 gadgets of degree >= 3");
  const int size = degree + 1;
  std::vector<Edge> edges;
  std::vector<Vertex> dark;
  for (int i = 0; i < gadgets; ++i) {
    const int base = i * size;
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) {
        if (a == 0 && b == 1) continue;  // the two tips stay apart
        edges.emplace_back(base + a, base + b);
      }
    }
    const int next = ((i + 1) % gadgets) * size;
    edges.emplace_back(std::min(base + 1, next), std::max(base + 1, next));
    dark.push_back(base + 1);
  }
  std::sort(edges.begin(), edges.end());
  Instance inst = assemble("fig4", gadgets * size, edges);
  inst.lists = ListAssignment::uniform(gadgets * size, iota_colors(1, degree));
  inst.request = uniform_request(dark, 1);
  return inst;
}

Instance triple_cover() {
  std::vector<Edge> edges;
  Vertex light = 5;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      for (int c = b + 1; c < 5; ++c, ++light) {
        for (int r : {a, b, c}) edges.emplace_back(r, light);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  Instance inst = assemble("fig5", 15, edges);
  inst.lists = ListAssignment::uniform(15, {1, 2, 3});
  const std::vector<Vertex> dark = {0, 1, 2, 3, 4};
  inst.request = uniform_request(dark, 1);
  return inst;
}

Instance two_cliques_matching(int degree) {
  if (degree < 2) throw PreconditionError("clique size must be at least 2");
  std::vector<Edge> edges;
  for (int side = 0; side < 2; ++side) {
    for (int a = 0; a < degree; ++a) {
      for (int b = a + 1; b < degree; ++b) edges.emplace_back(side * degree + a, side * degree + b);
    }
  }
  for (int i = 0; i < degree; ++i) edges.emplace_back(i, degree + i);
  std::sort(edges.begin(), edges.end());
  Instance inst = assemble("two-cliques-matching", 2 * degree, edges);
  inst.lists = ListAssignment::uniform(2 * degree, iota_colors(1, degree));
  std::vector<Vertex> first(degree);
  std::iota(first.begin(), first.end(), 0);
  inst.request = uniform_request(first, 1);
  return inst;
}

Instance cube_with_chord() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if ((v & bit) == 0) edges.emplace_back(v, v | bit);
    }
  }
  edges.emplace_back(0, 7);
  std::sort(edges.begin(), edges.end());
  Instance inst = assemble("cube-chord", 8, edges);
  inst.lists = ListAssignment::uniform(8, {1, 2, 3, 4});
  std::vector<Vertex> all(8);
  std::iota(all.begin(), all.end(), 0);
  inst.request = uniform_request(all, 1);
  return inst;
}

Instance bowtie() {
  Instance inst = assemble("bowtie", 5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  inst.lists = ListAssignment({{1, 2}, {1, 2}, {1, 2, 3, 4}, {3, 4}, {3, 4}});
  return inst;
}

Instance tight_diamond() {
  Instance inst = assemble("diamond", 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  inst.lists = ListAssignment({{1, 2}, {1, 2, 3}, {1, 2, 3}, {1, 2}});
  return inst;
}

Instance random_bounded_degree(int n, int degree, RequestShape shape, int slack, std::mt19937_64& rng) {
  if (degree < 3 || n < 4) throw PreconditionError("bounded-degree family needs degree >= 3 and n >= 4");
  for (;;) {
    std::vector<std::set<Vertex>> adj(n);
    for (Vertex v = 1; v < n; ++v) {
      std::vector<Vertex> open;
      for (Vertex u = 0; u < v; ++u) {
        if (static_cast<int>(adj[u].size()) < degree) open.push_back(u);
      }
      Vertex u = open[uniform(rng, 0, static_cast<int>(open.size()) - 1)];
      adj[u].insert(v);
      adj[v].insert(u);
    }
    const int extra = uniform(rng, 0, n * degree / 2);
    for (int t = 0; t < extra * 4 && extra > 0; ++t) {
      Vertex u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
      if (u == v || adj[u].count(v) || static_cast<int>(adj[u].size()) >= degree ||
          static_cast<int>(adj[v].size()) >= degree) {
        continue;
      }
      adj[u].insert(v);
      adj[v].insert(u);
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : adj[u]) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
    Instance inst = assemble("random-maxdeg", n, edges);
    const Graph& g = inst.graph;
    const int top = g.max_degree();
    if (top < 3 || (is_complete(g) && n == top + 1)) continue;
    const auto palette = iota_colors(1, top + 2 + slack);
    std::vector<std::vector<Color>> lists(n);
    for (Vertex v = 0; v < n; ++v) {
      int size = (g.degree(v) < top ? g.degree(v) + 1 : top) + slack;
      lists[v] = sample_colors(palette, size, rng);
    }
    inst.lists = ListAssignment(std::move(lists));
    inst.request = random_request(inst.lists, shape, rng);
    return inst;
  }
}

Instance random_ktree(int n, int k, const std::vector<int>& parts, RequestShape shape, std::mt19937_64& rng) {
  if (k < 0 || n < k) throw PreconditionError("k-tree family needs 0 <= k <= n");
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  auto link = [&](int a, int b) { edges.emplace_back(std::min(label[a], label[b]), std::max(label[a], label[b])); };
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) link(a, b);
  }
  std::vector<std::vector<int>> cliques;
  if (k > 0) {
    std::vector<int> base(k);
    std::iota(base.begin(), base.end(), 0);
    cliques.push_back(base);
  }
  for (int i = k; i < n; ++i) {
    if (k == 0) continue;
    const auto clique = cliques[uniform(rng, 0, static_cast<int>(cliques.size()) - 1)];
    for (int u : clique) link(u, i);
    for (int x = 0; x < k; ++x) {
      auto next = clique;
      next[x] = i;
      cliques.push_back(std::move(next));
    }
  }
  Instance inst = assemble("random-ktree", n, edges);
  inst.ktree = KTreeOrder{k, label};
  std::vector<std::vector<Color>> lists(n);
  if (parts.empty()) {
    const auto palette = iota_colors(1, k + 3);
    for (auto& l : lists) l = sample_colors(palette, k + 1, rng);
  } else {
    if (std::accumulate(parts.begin(), parts.end(), 0) != k + 1) {
      throw PreconditionError("lambda parts must sum to k + 1");
    }
    treewidth::LambdaAssignment lambda;
    lambda.parts = parts;
    Color next = 1;
    for (int p : parts) {
      const int size = p + uniform(rng, 0, 2);
      lambda.classes.push_back(iota_colors(next, next + size - 1));
      next += size;
    }
    for (auto& l : lists) {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (Color c : sample_colors(lambda.classes[i], parts[i], rng)) l.push_back(c);
      }
      std::sort(l.begin(), l.end());
    }
    inst.lambda = std::move(lambda);
  }
  inst.lists = ListAssignment(std::move(lists));
  inst.request = random_request(inst.lists, shape, rng);
  return inst;
}

Instance random_treedepth(int n, int k, RequestShape shape, int slack, std::mt19937_64& rng) {
  if (k < 1 || n < 1) throw PreconditionError("treedepth family needs k >= 1 and n >= 1");
  TreedepthForest forest;
  std::vector<int> depth(n, 1);
  forest.parent.assign(n, -1);
  for (Vertex v = 1; v < n; ++v) {
    std::vector<Vertex> open;
    for (Vertex u = 0; u < v; ++u) {
      if (depth[u] < k) open.push_back(u);
    }
    if (open.empty() || uniform(rng, 0, 9) == 0) continue;
    Vertex p = open[uniform(rng, 0, static_cast<int>(open.size()) - 1)];
    forest.parent[v] = p;
    depth[v] = depth[p] + 1;
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    bool direct = true;
    for (Vertex a = forest.parent[v]; a >= 0; a = forest.parent[a], direct = false) {
      if (uniform(rng, 0, 9) < (direct ? 8 : 5)) edges.emplace_back(std::min(a, v), std::max(a, v));
    }
  }
  std::sort(edges.begin(), edges.end());
  Instance inst = assemble("random-treedepth", n, edges);
  inst.forest = forest;
  inst.forest_height = k;
  const auto palette = iota_colors(1, k + 2 + slack);
  std::vector<std::vector<Color>> lists(n);
  for (auto& l : lists) l = sample_colors(palette, k + uniform(rng, 0, slack), rng);
  inst.lists = ListAssignment(std::move(lists));
  inst.request = random_request(inst.lists, shape, rng);
  return inst;
}

Instance random_three_connected(int n, int degree, std::mt19937_64& rng) {
  if (degree < 4) {
    throw PreconditionError("3-connected graphs have minimum degree 3, so maximum degree 3 forces regularity");
  }
  if (n < degree + 2) throw PreconditionError("need n >= degree + 2");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> target(n);
    for (auto& t : target) t = uniform(rng, 3, degree);
    target[uniform(rng, 0, n - 1)] = degree;
    if (std::accumulate(target.begin(), target.end(), 0) % 2) {
      auto it = std::find_if(target.begin(), target.end(), [&](int t) { return t < degree; });
      if (it == target.end()) continue;
      ++*it;
    }
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), target[v], v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      Vertex u = std::min(stubs[i], stubs[i + 1]), v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v && edges.insert({u, v}).second;
    }
    if (!simple) continue;
    Instance inst = assemble("random-3connected", n, {edges.begin(), edges.end()});
    const Graph& g = inst.graph;
    if (g.max_degree() != degree || is_regular(g) || !is_k_connected(g, 3)) continue;
    inst.lists = ListAssignment::uniform(n, iota_colors(1, degree));
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(uniform(rng, 1, n));
    std::sort(all.begin(), all.end());
    inst.request = uniform_request(all, 1);
    return inst;
  }
  throw BudgetExceeded("no 3-connected non-regular graph found");
}

degeneracy::Hypergraph random_hypergraph(int n, int d, std::mt19937_64& rng) {
  if (n < 1 || d < 2) throw PreconditionError("hypergraph family needs n >= 1 and d >= 2");
  std::vector<std::vector<int>> edges;
  auto random_edge = [&] {
    int size = std::min(n, uniform(rng, 1, d));
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    return all;
  };
  degeneracy::Hypergraph h(n, {});
  while (!degeneracy::is_k_edge_connected(h, 3)) {
    for (int i = 0; i < std::max(1, n / 4); ++i) edges.push_back(random_edge());
    h = degeneracy::Hypergraph(n, edges);
  }
  for (int extra = uniform(rng, 0, n / 2); extra > 0; --extra) edges.push_back(random_edge());
  return degeneracy::Hypergraph(n, std::move(edges));
}

Instance generate(const std::string& text, std::uint64_t seed) {
  const FamilySpec spec = parse_family(text);
  std::mt19937_64 rng(seed);
  auto param = [&](const char* key, std::int64_t fallback, std::int64_t lo, std::int64_t hi) {
    auto value = spec.get(key, fallback);
    if (value < lo || value > hi) {
      throw PreconditionError(std::string("parameter ") + key + " must lie in " + std::to_string(lo) + ".." +
                              std::to_string(hi));
    }
    return static_cast<int>(value);
  };
  Instance inst;
  const auto& name = spec.name;
  if (name == "fig1") {
    inst = cycle_counterexample();
  } else if (name == "fig2") {
    inst = diamond_counterexample();
  } else if (name == "fig3") {
    inst = three_tree_example();
  } else if (name == "fig4") {
    inst = gadget_ring(param("gadgets", 5, 2, 100000), param("degree", 3, 3, 64));
  } else if (name == "fig5") {
    inst = triple_cover();
  } else if (name == "two-cliques-matching") {
    inst = two_cliques_matching(param("degree", 3, 2, 64));
  } else if (name == "cube-chord") {
    inst = cube_with_chord();
  } else if (name == "bowtie") {
    inst = bowtie();
  } else if (name == "diamond") {
    inst = tight_diamond();
  } else if (name == "random-maxdeg") {
    inst = random_bounded_degree(param("n", 12, 4, 100000), param("degree", 4, 3, 64),
                                 shape_from(spec.get("shape", 0)), param("slack", 0, 0, 16), rng);
  } else if (name == "random-2tree") {
    inst = random_ktree(param("n", 50, 2, 10000000), 2, {}, shape_from(spec.get("shape", 2)), rng);
  } else if (name == "random-ktree") {
    const int k = param("k", 3, 0, 8);
    auto parts = digits(spec.get("lambda", 0));
    inst = random_ktree(param("n", 10, k, 1000000), k, parts, shape_from(spec.get("shape", 2)), rng);
  } else if (name == "random-treedepth") {
    inst = random_treedepth(param("n", 16, 1, 100000), param("k", 3, 1, 16), shape_from(spec.get("shape", 2)),
                            param("slack", 1, 0, 16), rng);
  } else if (name == "random-3connected") {
    inst = random_three_connected(param("n", 12, 6, 64), param("degree", 4, 4, 16), rng);
  } else {
    throw PreconditionError("unknown family '" + name + "'");
  }
  inst.seed = name.rfind("random-", 0) == 0 ? seed : 0;
  return inst;
}

}  // namespace flexicolor::io

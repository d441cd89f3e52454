#include "flexicolor/maxdeg.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace flexicolor::maxdeg {

namespace {

/// `released`, if set, counts as not precolored.
BadComponentReport classify_set(const Graph& g, const ListAssignment& lists, const PrecolorState& state,
                                const std::vector<Vertex>& vertices, Vertex released = -1) {
  BadComponentReport report;
  report.vertices = vertices;
  auto sub = induced_subgraph(g, vertices);
  report.lists.reserve(vertices.size());
  bool tight = true;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    std::vector<Color> list(lists[v].begin(), lists[v].end());
    for (Vertex w : g.neighbors(v)) {
      if (!state.fixed[w] || w == released) continue;
      ++report.edges_to_fixed;
      auto it = std::lower_bound(list.begin(), list.end(), state.color[w]);
      if (it != list.end() && *it == state.color[w]) list.erase(it);
    }
    if (static_cast<int>(list.size()) != sub.graph.degree(static_cast<Vertex>(i))) tight = false;
    report.lists.push_back(std::move(list));
  }
  auto tree = block_cut_tree(sub.graph);
  bool gallai = true;
  for (const auto& block : tree.blocks) {
    BlockReport b;
    for (Vertex local : block.vertices) b.vertices.push_back(sub.to_parent[local]);
    std::sort(b.vertices.begin(), b.vertices.end());
    b.kind = block.kind;
    b.terminal = block.terminal;
    if (block.kind == BlockKind::Other) gallai = false;
    report.blocks.push_back(std::move(b));
  }
  report.bad = tight && gallai;
  return report;
}

struct Snapshot {
  std::vector<int> comp_of;  // -1 on precolored vertices
  std::vector<BadComponentReport> comps;
  /// Per component, vertices whose pruned list exceeds their degree there,
  /// at most maxdeg + 1 of them.
  std::vector<std::vector<Vertex>> slack;

  int bad_count() const {
    return static_cast<int>(std::count_if(comps.begin(), comps.end(), [](const auto& c) { return c.bad; }));
  }
};

Snapshot snapshot(const Graph& g, const ListAssignment& lists, const PrecolorState& state) {
  Snapshot snap;
  snap.comp_of.assign(g.size(), -1);
  for (const auto& part : components(g, state.fixed)) {
    for (Vertex v : part) snap.comp_of[v] = static_cast<int>(snap.comps.size());
    snap.comps.push_back(classify_set(g, lists, state, part));
  }
  snap.slack.resize(snap.comps.size());
  for (std::size_t id = 0; id < snap.comps.size(); ++id) {
    const auto& comp = snap.comps[id];
    for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
      const Vertex v = comp.vertices[i];
      int degree = 0;
      for (Vertex w : g.neighbors(v)) degree += snap.comp_of[w] == static_cast<int>(id);
      if (static_cast<int>(comp.lists[i].size()) > degree) {
        snap.slack[id].push_back(v);
        if (static_cast<int>(snap.slack[id].size()) > g.max_degree()) break;
      }
    }
  }
  return snap;
}

std::vector<int> adjacent_components(const Graph& g, const Snapshot& snap, Vertex r) {
  std::vector<int> ids;
  for (Vertex w : g.neighbors(r)) {
    if (snap.comp_of[w] >= 0) ids.push_back(snap.comp_of[w]);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

int b_from(const Graph& g, const ListAssignment& lists, const PrecolorState& state, const Snapshot& snap,
           Vertex r) {
  auto ids = adjacent_components(g, snap, r);
  int before = 0;
  bool may_be_bad = true;
  for (int id : ids) {
    before += snap.comps[id].bad;
    // a slack vertex away from r stays slack after the merge
    for (Vertex v : snap.slack[id]) may_be_bad = may_be_bad && g.adjacent(r, v);
  }
  if (!may_be_bad) return before;
  std::vector<Vertex> merged{r};
  for (int id : ids) merged.insert(merged.end(), snap.comps[id].vertices.begin(), snap.comps[id].vertices.end());
  std::sort(merged.begin(), merged.end());
  return before - (classify_set(g, lists, state, merged, r).bad ? 1 : 0);
}

bool is_clique_of_size(const Graph& g, const std::vector<Vertex>& vertices, int size) {
  if (static_cast<int>(vertices.size()) != size) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

// Every bad component other than K_maxdeg and K_1 sends at least
// 2 * maxdeg - 2 edges to the precolored set; those two send maxdeg.
void check_edge_counts(const Graph& g, const Snapshot& snap) {
  const int delta = g.max_degree();
  for (const auto& comp : snap.comps) {
    if (!comp.bad) continue;
    const bool small = comp.vertices.size() == 1 || is_clique_of_size(g, comp.vertices, delta);
    const int need = small ? delta : 2 * delta - 2;
    if (comp.edges_to_fixed < need) {
      throw InternalError("bad component at vertex " + std::to_string(comp.vertices.front()) + " has " +
                          std::to_string(comp.edges_to_fixed) + " edges to precolored vertices, expected >= " +
                          std::to_string(need));
    }
  }
}

DischargeCheck measure_discharge(const Graph& g, const PrecolorState& state, const Snapshot& snap) {
  DischargeCheck check;
  check.recorded = true;
  std::vector<std::set<Vertex>> kept_near(snap.comps.size());
  check.max_kept_degree = 0;
  for (Vertex r = 0; r < g.size(); ++r) {
    if (!state.fixed[r]) continue;
    ++check.kept;
    int degree = 0;
    for (int id : adjacent_components(g, snap, r)) {
      if (!snap.comps[id].bad) continue;
      ++degree;
      kept_near[id].insert(r);
    }
    check.max_kept_degree = std::max(check.max_kept_degree, degree);
  }
  check.min_component_degree = g.size();
  for (std::size_t id = 0; id < snap.comps.size(); ++id) {
    if (!snap.comps[id].bad) continue;
    ++check.bad_components;
    check.min_component_degree = std::min(check.min_component_degree, static_cast<int>(kept_near[id].size()));
  }
  if (check.bad_components == 0) check.min_component_degree = 0;
  if (check.max_kept_degree > 2) {
    throw InternalError("a kept request touches " + std::to_string(check.max_kept_degree) + " bad components");
  }
  if (check.bad_components > 0 && check.min_component_degree < 2) {
    throw InternalError("a bad component touches fewer than two kept requests");
  }
  if (4 * check.kept < 5 * check.bad_components) {
    throw InternalError("kept requests " + std::to_string(check.kept) + " fall below 5/4 of " +
                        std::to_string(check.bad_components) + " bad components");
  }
  return check;
}

std::vector<Vertex> fixed_vertices(const PrecolorState& state) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(state.fixed.size()); ++v) {
    if (state.fixed[v]) out.push_back(v);
  }
  return out;
}

Coloring extend_or_throw(const Graph& g, const ListAssignment& lists, const PrecolorState& state,
                         const DegreeChoosableOptions& options) {
  std::vector<std::pair<Vertex, Color>> fixed;
  for (Vertex v : fixed_vertices(state)) fixed.emplace_back(v, state.color[v]);
  auto result = precolor_and_extend(g, lists, fixed, options);
  if (!result.coloring) {
    throw InternalError("component at vertex " + std::to_string(result.infeasible_component.front()) +
                        " could not be colored after removing bad components");
  }
  return *result.coloring;
}

}  // namespace

std::vector<BadComponentReport> classify_components(const Graph& g, const ListAssignment& lists,
                                                    const PrecolorState& state) {
  return snapshot(g, lists, state).comps;
}

int b_value(const Graph& g, const ListAssignment& lists, const PrecolorState& state, Vertex r) {
  if (!g.contains(r) || !state.fixed[r]) {
    throw PreconditionError("vertex " + std::to_string(r) + " is not precolored");
  }
  return b_from(g, lists, state, snapshot(g, lists, state), r);
}

void validate_instance(const Graph& g, const ListAssignment& lists) {
  if (g.size() == 0) throw PreconditionError("graph is empty");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  const int delta = g.max_degree();
  if (delta < 3) throw PreconditionError("maximum degree " + std::to_string(delta) + " is below 3");
  if (g.size() == delta + 1 && is_complete(g)) {
    throw PreconditionError("graph is the complete graph K" + std::to_string(delta + 1));
  }
  lists.validate(g);
  for (Vertex v = 0; v < g.size(); ++v) {
    const int need = g.degree(v) < delta ? g.degree(v) + 1 : delta;
    if (lists.list_size(v) < need) {
      throw PreconditionError("vertex " + std::to_string(v) + " of degree " + std::to_string(g.degree(v)) +
                              " has a list of size " + std::to_string(lists.list_size(v)) + ", needs " +
                              std::to_string(need));
    }
  }
}

SolverOutcome solve_unweighted(const Graph& g, const ListAssignment& lists, const Request& request,
                               const SolverOptions& options) {
  validate_instance(g, lists);
  if (request.kind() != RequestKind::Unweighted) throw PreconditionError("request must be unweighted");
  request.validate(lists);
  const int delta = g.max_degree();
  const auto requested = request.domain();

  SolverOutcome out;
  out.total = request.total_weight();
  const int palette = options.mode == ColoringMode::Brooks ? delta : delta + 1;
  out.certified_fraction = Rational(1, 6 * palette);
  out.certified_amount = out.certified_fraction * Rational(out.total);
  out.trace.mode = options.mode;

  auto independent = independent_request_subset(g, requested, 1, options.mode);
  out.trace.colors_used = independent.colors_used;
  out.trace.independent = independent.vertices;

  PrecolorState state{std::vector<bool>(g.size(), false), request.preferred(g.size())};
  for (Vertex r : independent.vertices) state.fixed[r] = true;

  bool first_pass = true;
  for (;;) {
    auto snap = snapshot(g, lists, state);
    check_edge_counts(g, snap);
    if (first_pass) out.trace.initial_bad_components = snap.bad_count();
    first_pass = false;
    if (snap.bad_count() == 0) break;

    Move move;
    for (Vertex r : fixed_vertices(state)) {
      int b = b_from(g, lists, state, snap, r);
      if (b >= 2) {
        move = {r, b};
        break;
      }
    }
    if (move.vertex < 0) {
      if (!out.trace.discharge.recorded) out.trace.discharge = measure_discharge(g, state, snap);
      for (Vertex r : fixed_vertices(state)) {
        auto ids = adjacent_components(g, snap, r);
        if (std::any_of(ids.begin(), ids.end(), [&](int id) { return snap.comps[id].bad; })) {
          move = {r, b_from(g, lists, state, snap, r)};
          break;
        }
      }
      if (move.vertex < 0) throw InternalError("bad component with no precolored neighbour");
      if (move.b < 1) {
        throw InternalError("releasing vertex " + std::to_string(move.vertex) +
                            " next to a bad component does not reduce the bad count");
      }
    }
    state.fixed[move.vertex] = false;
    out.trace.moves.push_back(move);
  }
  out.trace.kept = fixed_vertices(state);

  out.coloring = extend_or_throw(g, lists, state, options.extension);
  out.satisfied = satisfied_amount(g, lists, out.coloring, request);
  out.derivation = std::string("independent requests from a ") + to_string(options.mode) + " coloring with " +
                   std::to_string(independent.colors_used) + " classes; certified |R|/(6*" +
                   std::to_string(palette) + ")";
  if (Rational(out.satisfied) < out.certified_amount) {
    throw InternalError("satisfied " + std::to_string(out.satisfied) + " below certified " +
                        to_string(out.certified_amount));
  }
  return out;
}

SolverOutcome solve_weighted(const Graph& g, const ListAssignment& lists, const Request& request,
                             const SolverOptions& options) {
  validate_instance(g, lists);
  request.validate(lists);
  const int n = g.size();
  const Weight delta = g.max_degree();
  const Request unique = reduce_to_unique(request);

  SolverOutcome out;
  out.total = request.total_weight();
  Weight denominator = 2 * delta * delta * delta;
  if (request.kind() == RequestKind::Weighted) denominator *= lists.max_list_size();
  out.certified_fraction = Rational(1, denominator);
  out.certified_amount = out.certified_fraction * Rational(out.total);
  out.trace.mode = options.mode;

  const auto weights = unique.vertex_weights(n);
  auto independent = independent_request_subset(g, unique.domain(), 3, options.mode, weights);
  out.trace.colors_used = independent.colors_used;
  out.trace.independent = independent.vertices;

  std::vector<Vertex> owner(n, -1);  // the unique nearby independent request, if any
  for (Vertex r : independent.vertices) {
    for (Vertex v : g.neighbors(r)) {
      if (owner[v] >= 0) throw InternalError("vertex " + std::to_string(v) + " has two independent neighbours");
      owner[v] = r;
    }
  }
  for (auto [u, v] : g.edges()) {
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) {
      throw InternalError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") is adjacent to two independent requests");
    }
  }

  PrecolorState state{std::vector<bool>(n, false), unique.preferred(n)};
  for (Vertex r : independent.vertices) state.fixed[r] = true;
  auto snap = snapshot(g, lists, state);
  out.trace.initial_bad_components = snap.bad_count();

  for (const auto& comp : snap.comps) {
    if (!comp.bad) continue;
    auto sub = induced_subgraph(g, comp.vertices);
    for (Vertex i = 0; i < sub.graph.size(); ++i) {
      if (sub.graph.degree(i) < delta - 1) {
        throw InternalError("vertex " + std::to_string(sub.to_parent[i]) + " of a bad component has degree " +
                            std::to_string(sub.graph.degree(i)) + " inside it");
      }
    }
    if (comp.blocks.size() < 2) {
      throw InternalError("bad component at vertex " + std::to_string(comp.vertices.front()) + " is a single block");
    }
    std::vector<int> block_count(n, 0);
    for (const auto& block : comp.blocks) {
      for (Vertex v : block.vertices) ++block_count[v];
    }
    Vertex pick = -1;
    for (const auto& block : comp.blocks) {
      if (!block.terminal) continue;
      for (Vertex v : block.vertices) {
        const Vertex r = owner[v];
        if (block_count[v] != 1 || r < 0 || !state.fixed[r]) continue;
        if (pick < 0 || weights[r] < weights[pick] || (weights[r] == weights[pick] && r < pick)) pick = r;
      }
    }
    if (pick < 0) {
      throw InternalError("bad component at vertex " + std::to_string(comp.vertices.front()) +
                          " has no request next to a terminal block");
    }
    state.fixed[pick] = false;
    out.trace.moves.push_back({pick, 0});
  }
  if (snapshot(g, lists, state).bad_count() != 0) throw InternalError("bad components remain after release");
  out.trace.kept = fixed_vertices(state);

  out.coloring = extend_or_throw(g, lists, state, options.extension);
  out.satisfied = satisfied_amount(g, lists, out.coloring, request);
  out.derivation = std::string("distance-3 requests from a ") + to_string(options.mode) + " coloring of the cube with " +
                   std::to_string(independent.colors_used) + " classes; certified total/(2*" +
                   std::to_string(delta) + "^3" +
                   (request.kind() == RequestKind::Weighted ? "*" + std::to_string(lists.max_list_size()) : "") + ")";
  if (Rational(out.satisfied) < out.certified_amount) {
    throw InternalError("satisfied weight " + std::to_string(out.satisfied) + " below certified " +
                        to_string(out.certified_amount));
  }
  return out;
}

}  // namespace flexicolor::maxdeg

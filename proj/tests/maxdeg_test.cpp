#include <doctest.h>

#include "flexicolor/io/generate.hpp"
#include "flexicolor/maxdeg.hpp"
#include "flexicolor/oracle.hpp"
#include "support.hpp"

using namespace flexicolor;
using namespace flexicolor::maxdeg;
using namespace testing;

namespace {

Graph triangles_with_bridge() {
  return Graph(6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

Graph triangles_with_matching() {
  return Graph(6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

PrecolorState state_of(int n, std::vector<std::pair<Vertex, Color>> fixed) {
  PrecolorState s{std::vector<bool>(n, false), std::vector<Color>(n, kNoColor)};
  for (auto [v, c] : fixed) {
    s.fixed[v] = true;
    s.color[v] = c;
  }
  return s;
}

ListAssignment pruned(const BadComponentReport& r) { return ListAssignment(r.lists); }

}  // namespace

TEST_CASE("classification of components after precoloring") {
  auto lists = ListAssignment::uniform(6, {1, 2, 3});
  auto comps = classify_components(triangles_with_bridge(), lists, state_of(6, {{0, 1}}));
  REQUIRE(comps.size() == 1);
  CHECK_FALSE(comps[0].bad);
  CHECK(comps[0].vertices == std::vector<Vertex>{1, 2, 3, 4, 5});

  Graph m = triangles_with_matching();
  auto state = state_of(6, {{0, 1}});
  for (const auto& c : classify_components(m, lists, state)) {
    auto sub = induced_subgraph(m, c.vertices);
    CHECK(c.bad == oracle::bruteforce_bad_component(sub.graph, pruned(c)));
  }

  ListAssignment roomy({{1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3}, {1, 2, 3}});
  for (const auto& c : classify_components(triangles_with_bridge(), roomy, state_of(6, {}))) CHECK_FALSE(c.bad);
}

TEST_CASE("b values") {
  // r = 0 between x = 1 and y = 2; s = 3 and t = 4 pin x and y.
  Graph g(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 4}});
  auto state = state_of(5, {{0, 2}, {3, 1}, {4, 1}});
  ListAssignment wide({{2, 3, 4}, {1, 2}, {1, 2}, {1}, {1}});
  auto comps = classify_components(g, wide, state);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].bad);
  CHECK(comps[1].bad);
  CHECK(b_value(g, wide, state, 0) == 2);
  CHECK(b_value(g, wide, state, 3) == 0);  // {s, x} is a tight K2
  ListAssignment loose({{2, 3, 4}, {1, 2}, {1, 2}, {1, 3}, {1}});
  CHECK(b_value(g, loose, state, 3) == 1);

  ListAssignment narrow({{2, 3}, {1, 2}, {1, 2}, {1}, {1}});
  CHECK(b_value(g, narrow, state, 0) == 1);

  ListAssignment roomy({{2, 3, 4}, {1, 2, 3}, {1, 2, 3}, {1}, {1}});
  CHECK(b_value(g, roomy, state, 3) == 0);
  CHECK_THROWS_AS(b_value(g, roomy, state, 1), PreconditionError);
}

TEST_CASE("unweighted solver on small fixtures") {
  auto lists = ListAssignment::uniform(4, {1, 2, 3});
  std::vector<std::pair<Vertex, Color>> one{{0, 1}};
  auto out = solve_unweighted(diamond(), lists, Request::unweighted(one));
  CHECK(out.satisfied == 1);
  CHECK(out.bound_met());

  auto tcm = io::two_cliques_matching(3);
  auto res = solve_unweighted(tcm.graph, tcm.lists, tcm.request);
  CHECK(res.satisfied >= 1);
  CHECK(res.satisfied <= oracle::optimal_satisfaction(tcm.graph, tcm.lists, tcm.request).optimum);
  CHECK(res.certified_fraction == Rational(1, 18));

  auto fig2 = io::diamond_counterexample();
  CHECK_THROWS_AS(solve_unweighted(fig2.graph, fig2.lists, fig2.request), PreconditionError);
  CHECK_THROWS_AS(solve_unweighted(complete(4), ListAssignment::uniform(4, {1, 2, 3}), Request()),
                  PreconditionError);

  auto empty = solve_unweighted(diamond(), lists, Request());
  CHECK(empty.satisfied == 0);
  CHECK(empty.bound_met());
}

TEST_CASE("weighted solver on small fixtures") {
  auto lists = ListAssignment::uniform(4, {1, 2, 3});
  auto single = solve_weighted(diamond(), lists, Request(RequestKind::Weighted, {{3, 2, 9}}));
  CHECK(single.satisfied == 9);

  auto tcm = io::two_cliques_matching(3);
  Request w(RequestKind::Weighted, {{0, 1, 1}, {1, 1, 1}, {2, 1, 1}});
  auto res = solve_weighted(tcm.graph, tcm.lists, w);
  CHECK(Rational(res.satisfied) >= Rational(3, 2 * 81));
  CHECK(res.satisfied <= 1);

  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    auto inst = io::random_bounded_degree(12, 3, io::RequestShape::Unique, 0, rng);
    Request ones(RequestKind::UniquelyWeighted, [&] {
      std::vector<RequestEntry> e;
      for (const auto& x : inst.request.entries()) e.push_back({x.vertex, x.color, 1});
      return e;
    }());
    auto o = solve_weighted(inst.graph, inst.lists, ones);
    const int d = inst.graph.max_degree();
    CHECK(Rational(o.satisfied) >= Rational(ones.total_weight(), 2 * d * d * d));
  }
}

TEST_CASE("solvers never beat the oracle and always meet their certificate") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 150; ++t) {
    const int n = 5 + static_cast<int>(rng() % 6);
    const int degree = 3 + static_cast<int>(rng() % 2);
    auto shape = static_cast<io::RequestShape>(rng() % 3);
    auto inst = io::random_bounded_degree(n, degree, shape, 0, rng);
    auto best = oracle::optimal_satisfaction(inst.graph, inst.lists, inst.request);
    if (shape == io::RequestShape::Unweighted) {
      for (auto mode : {ColoringMode::Brooks, ColoringMode::Greedy}) {
        auto o = solve_unweighted(inst.graph, inst.lists, inst.request, {.mode = mode});
        CHECK(o.bound_met());
        CHECK(o.satisfied <= best.optimum);
        CHECK(o.certified_amount <= Rational(best.optimum));
        if (o.trace.discharge.recorded) CHECK(4 * o.trace.discharge.kept >= 5 * o.trace.discharge.bad_components);
      }
    }
    auto w = solve_weighted(inst.graph, inst.lists, inst.request);
    CHECK(w.bound_met());
    CHECK(w.satisfied <= best.optimum);
  }
}

TEST_CASE("classification matches the brute-force definition on random states") {
  std::mt19937_64 rng(33);
  int bad_seen = 0;
  for (int t = 0; t < 300; ++t) {
    auto inst = io::random_bounded_degree(4 + static_cast<int>(rng() % 7), 3, io::RequestShape::Unweighted, 0, rng);
    const int n = inst.graph.size();
    PrecolorState state{std::vector<bool>(n, false), std::vector<Color>(n, kNoColor)};
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3 == 0) {
        state.fixed[v] = true;
        state.color[v] = inst.lists[v][rng() % inst.lists.list_size(v)];
      }
    }
    for (const auto& c : classify_components(inst.graph, inst.lists, state)) {
      auto sub = induced_subgraph(inst.graph, c.vertices);
      CHECK(c.bad == oracle::bruteforce_bad_component(sub.graph, pruned(c)));
      bad_seen += c.bad;
    }
  }
  CHECK(bad_seen > 0);
}

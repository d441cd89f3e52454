#include <doctest.h>

#include "flexicolor/degeneracy.hpp"
#include "flexicolor/io/generate.hpp"
#include "support.hpp"

using namespace flexicolor;
using namespace flexicolor::degeneracy;
using namespace testing;

namespace {

std::vector<Vertex> requested_vertices(const io::Instance& inst) {
  auto d = inst.request.domain();
  return {d.begin(), d.end()};
}

void check_spanning(const Hypergraph& h, int d) {
  auto chosen = hypergraph_spanning_set(h, d);
  CHECK(spans_connected(h, chosen));
  CHECK(Rational(static_cast<std::int64_t>(chosen.size())) <=
        (Rational(1) - epsilon(d)) * Rational(h.edge_count()));
}

}  // namespace

TEST_CASE("epsilon values") {
  CHECK(epsilon(2) == Rational(1, 3));
  CHECK(epsilon(3) == Rational(1, 4));
  CHECK(epsilon(4) == Rational(3, 19));
  for (int d = 3; d < 40; ++d) {
    CHECK(epsilon(d) > Rational(0));
    CHECK(epsilon(d) <= epsilon(d - 1));
  }
}

TEST_CASE("hypergraph edge connectivity") {
  Hypergraph three({2, {{0, 1}, {0, 1}, {1, 0}}});
  CHECK(is_k_edge_connected(three, 3));
  CHECK_FALSE(is_k_edge_connected(three, 4));
  Hypergraph ring(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(is_k_edge_connected(ring, 2));
  CHECK_FALSE(is_k_edge_connected(ring, 3));
  Hypergraph wide(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {2}});
  CHECK(is_k_edge_connected(wide, 3));
  CHECK(wide.rank() == 3);
  CHECK_THROWS_AS(Hypergraph(2, {{}}), PreconditionError);
  CHECK_THROWS_AS(Hypergraph(2, {{0, 2}}), PreconditionError);
}

TEST_CASE("spanning sets of small hypergraphs") {
  Hypergraph parallel(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(hypergraph_spanning_set(parallel, 2).size() == 1);
  check_spanning(parallel, 2);

  std::vector<std::vector<int>> k4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.push_back({u, v});
  Hypergraph clique(4, k4);
  CHECK(hypergraph_spanning_set(clique, 2).size() == 3);
  check_spanning(clique, 2);

  CHECK_THROWS_AS(hypergraph_spanning_set(Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 2), PreconditionError);
  CHECK_THROWS_AS(hypergraph_spanning_set(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}), 2), PreconditionError);

  std::mt19937_64 rng(31);
  for (int d : {3, 4, 5, 7}) {
    for (int t = 0; t < 40; ++t) check_spanning(io::random_hypergraph(4 + t % 20, d, rng), d);
  }
}

TEST_CASE("ordering from a spanning tree") {
  Graph g(4, std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::vector<Edge> tree{{0, 2}, {1, 2}, {2, 3}};
  std::vector<Vertex> leaves{1};
  auto d = ordering_from_tree(g, tree, leaves, 0);
  CHECK(d.order == std::vector<Vertex>{1, 3, 2, 0});
  CHECK(d.bound == 2);
  CHECK_FALSE(check_ordering(g, d).has_value());
  CHECK(std::find(d.first.begin(), d.first.end(), 1) != d.first.end());

  std::vector<Vertex> with_root{0, 1};
  CHECK_THROWS_AS(ordering_from_tree(g, tree, with_root, 0), PreconditionError);
  std::vector<Vertex> high{1};
  CHECK_THROWS_AS(ordering_from_tree(g, tree, high, 2), PreconditionError);
  std::vector<Edge> short_tree{{0, 2}, {1, 2}};
  CHECK_THROWS_AS(ordering_from_tree(g, short_tree, leaves, 0), PreconditionError);

  auto p = path(5);
  DegeneracyOrdering bad{{0, 1, 2, 3, 4}, 0, {0}};
  CHECK(check_ordering(p, bad).has_value());
  DegeneracyOrdering good{{0, 1, 2, 3, 4}, 1, {0}};
  CHECK_FALSE(check_ordering(p, good).has_value());
}

TEST_CASE("pipeline on the cube with a chord") {
  auto inst = io::cube_with_chord();
  auto r = requested_vertices(inst);
  for (auto mode : {ColoringMode::Greedy, ColoringMode::Brooks}) {
    auto res = flexible_degeneracy_order(inst.graph, r, {mode, 0});
    CHECK_FALSE(check_ordering(inst.graph, res.ordering).has_value());
    CHECK(res.ordering.bound == inst.graph.max_degree() - 1);
    CHECK(res.bound_met());
    CHECK(res.first_requested >= 1);
  }
  std::vector<Vertex> one{5};
  auto single = flexible_degeneracy_order(inst.graph, one);
  CHECK(single.first_requested == 1);
}

TEST_CASE("pipeline preconditions") {
  auto ring = io::gadget_ring(4, 4);
  CHECK_THROWS_AS(flexible_degeneracy_order(ring.graph, requested_vertices(ring)), PreconditionError);
  std::vector<Vertex> all(10);
  std::iota(all.begin(), all.end(), 0);
  CHECK_THROWS_AS(flexible_degeneracy_order(petersen(), all), PreconditionError);
  auto cube = io::cube_with_chord();
  std::vector<Vertex> outside{9};
  CHECK_THROWS_AS(flexible_degeneracy_order(cube.graph, outside), PreconditionError);
}

TEST_CASE("pipeline on random 3-connected graphs") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 25; ++t) {
    auto inst = io::random_three_connected(20 + t, 4 + t % 3, rng);
    std::vector<Vertex> r;
    for (Vertex v = 0; v < inst.graph.size(); ++v)
      if (rng() % 3 == 0) r.push_back(v);
    if (r.empty()) r.push_back(0);
    auto res = flexible_degeneracy_order(inst.graph, r);
    CHECK_FALSE(check_ordering(inst.graph, res.ordering).has_value());
    CHECK(res.bound_met());
    const Rational floor = epsilon(inst.graph.max_degree()) /
                           Rational(2 * (inst.graph.max_degree() + 1) * (inst.graph.max_degree() + 1));
    CHECK(res.certified_fraction >= floor);
  }
}

TEST_CASE("game connectivity") {
  CHECK(exact_game_connectivity(cycle(4)).kappa == Rational(1, 2));
  CHECK(exact_game_connectivity(complete(4)).kappa == Rational(3, 4));
  CHECK(game_connectivity_by_trees(cycle(4)).kappa == Rational(1, 2));
  CHECK(game_connectivity_by_trees(complete(4)).kappa == Rational(3, 4));
  CHECK(exact_game_connectivity(complete(2)).kappa == Rational(1, 2));
  CHECK(game_connectivity_by_trees(complete(2)).kappa == Rational(1));
  CHECK_THROWS_AS(exact_game_connectivity(Graph(3, std::vector<Edge>{{0, 1}})), PreconditionError);
  CHECK_THROWS_AS(exact_game_connectivity(cycle(17)), BudgetExceeded);

  auto fig = io::triple_cover();
  CHECK(fig.graph.size() == 15);
  CHECK(leaf_ratio(fig.graph, requested_vertices(fig)) == Rational(2, 5));

  std::mt19937_64 rng(35);
  for (int n : {1, 3, 4, 5, 6, 7}) {
    for (int t = 0; t < 15; ++t) {
      auto g = random_connected(n, 0.2 + 0.05 * t, rng);
      CHECK(exact_game_connectivity(g).kappa == game_connectivity_by_trees(g).kappa);
    }
  }
}

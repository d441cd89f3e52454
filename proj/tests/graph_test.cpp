#include <doctest.h>

#include <set>

#include "flexicolor/blocks.hpp"
#include "flexicolor/coloring.hpp"
#include "flexicolor/structure.hpp"
#include "support.hpp"

using namespace flexicolor;
using namespace testing;

TEST_CASE("graph rejects loops, parallel edges and bad ids") {
  CHECK_THROWS_AS(Graph(2, std::vector<Edge>{{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(2, std::vector<Edge>{{0, 1}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(2, std::vector<Edge>{{0, 2}}), PreconditionError);
  Graph g = diamond();
  CHECK(g.edge_count() == 5);
  CHECK(g.max_degree() == 3);
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 3));
}

TEST_CASE("structural predicates") {
  CHECK(is_complete(complete(4)));
  CHECK(is_cycle(cycle(5)));
  CHECK_FALSE(is_cycle(path(5)));
  CHECK(is_regular(petersen()));
  CHECK(is_tree(path(4)));
  CHECK(is_k_connected(petersen(), 3));
  CHECK_FALSE(is_k_connected(cycle(6), 3));
  CHECK(is_k_connected(cycle(6), 2));
  CHECK_FALSE(is_k_connected(complete(3), 3));
  CHECK(graph_power(path(4), 3).edge_count() == 6);
}

TEST_CASE("triangle is a single clique block") {
  auto t = block_cut_tree(complete(3));
  REQUIRE(t.blocks.size() == 1);
  CHECK(t.blocks[0].kind == BlockKind::Clique);
  CHECK(t.cut_vertices.empty());
}

TEST_CASE("path of three vertices has two terminal blocks around its middle") {
  auto t = block_cut_tree(path(3));
  REQUIRE(t.blocks.size() == 2);
  CHECK(t.cut_vertices == std::vector<Vertex>{1});
  CHECK(t.blocks[0].terminal);
  CHECK(t.blocks[1].terminal);
}

TEST_CASE("bowtie splits at the shared vertex") {
  auto t = block_cut_tree(bowtie());
  REQUIRE(t.blocks.size() == 2);
  CHECK(t.cut_vertices == std::vector<Vertex>{2});
  for (const auto& b : t.blocks) CHECK(b.kind == BlockKind::Clique);
}

TEST_CASE("block tags") {
  CHECK(classify_block(cycle(5), {0, 1, 2, 3, 4}) == BlockKind::OddCycle);
  CHECK(classify_block(cycle(6), {0, 1, 2, 3, 4, 5}) == BlockKind::Other);
  CHECK(classify_block(diamond(), {0, 1, 2, 3}) == BlockKind::Other);
  CHECK(classify_block(complete(2), {0, 1}) == BlockKind::Clique);
}

TEST_CASE("disconnected input is rejected") {
  Graph g(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(block_cut_tree(g), PreconditionError);
}

TEST_CASE("blocks agree with subset brute force on small graphs") {
  auto compare = [](const Graph& g) {
    auto t = block_cut_tree(g);
    std::vector<std::vector<Vertex>> got;
    std::set<Edge> covered;
    for (const auto& b : t.blocks) {
      got.push_back(b.vertices);
      for (auto e : b.edges) CHECK(covered.insert(e).second);
      CHECK(b.kind == classify_block(g, b.vertices));
    }
    CHECK(static_cast<int>(covered.size()) == g.edge_count());
    std::sort(got.begin(), got.end());
    CHECK(got == brute_force_blocks(g));
    // Terminal means exactly one cut-vertex when there are several blocks.
    for (const auto& b : t.blocks)
      CHECK(b.terminal == (t.blocks.size() > 1 && b.cut_vertices.size() == 1));
  };
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1) / 2)); ++mask) {
      Graph g = from_mask(n, mask);
      if (is_connected(g)) compare(g);
    }
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) compare(random_connected(8, 0.3, rng));
}

TEST_CASE("proper colorings") {
  auto c5 = proper_coloring(cycle(5), 1, ColoringMode::Greedy);
  CHECK(proper(cycle(5), c5.color));
  CHECK(c5.colors_used <= 3);

  auto p = proper_coloring(petersen(), 1, ColoringMode::Brooks);
  CHECK(proper(petersen(), p.color));
  CHECK(p.colors_used <= 3);

  CHECK_THROWS_AS(proper_coloring(complete(4), 1, ColoringMode::Brooks), PreconditionError);
  CHECK_THROWS_AS(proper_coloring(cycle(7), 1, ColoringMode::Brooks), PreconditionError);
  CHECK_NOTHROW(proper_coloring(cycle(6), 1, ColoringMode::Brooks));
}

TEST_CASE("colorings are proper on the power graph and within their palette") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_connected(9, 0.35, rng);
    for (int power : {1, 3}) {
      Graph h = power == 1 ? g : graph_power(g, power);
      auto greedy = proper_coloring(g, power, ColoringMode::Greedy);
      CHECK(proper(h, greedy.color));
      CHECK(greedy.colors_used <= h.max_degree() + 1);
      if (!is_complete(h) && !is_cycle(h)) {
        auto brooks = proper_coloring(g, power, ColoringMode::Brooks);
        CHECK(proper(h, brooks.color));
        CHECK(brooks.colors_used <= std::max(1, h.max_degree()));
      }
    }
  }
}

TEST_CASE("independent request subsets") {
  std::vector<Vertex> one{3};
  CHECK(independent_request_subset(cycle(6), one, 1, ColoringMode::Greedy).vertices == one);

  std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  CHECK(independent_request_subset(cycle(6), all, 1, ColoringMode::Greedy).vertices.size() == 3);

  std::vector<Vertex> p7{0, 1, 2, 3, 4, 5, 6};
  auto far = independent_request_subset(path(7), p7, 3, ColoringMode::Greedy);
  CHECK(far.vertices.size() >= 2);
  auto dist = bfs_distances(path(7), far.vertices[0]);
  for (std::size_t i = 1; i < far.vertices.size(); ++i) CHECK(dist[far.vertices[i]] > 3);
}

TEST_CASE("independent subsets meet the class-size bound") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_connected(10, 0.3, rng);
    std::vector<Vertex> r;
    std::vector<Weight> w(10);
    for (Vertex v = 0; v < 10; ++v) {
      if (rng() % 2) r.push_back(v);
      w[v] = static_cast<Weight>(rng() % 50);
    }
    for (int distance : {1, 3}) {
      auto out = independent_request_subset(g, r, distance, ColoringMode::Greedy);
      for (Vertex a : out.vertices) {
        auto d = bfs_distances(g, a);
        for (Vertex b : out.vertices) if (a != b) CHECK(d[b] > distance);
      }
      CHECK(out.vertices.size() * out.colors_used >= r.size());
      auto heavy = independent_request_subset(g, r, distance, ColoringMode::Greedy, w);
      Weight kept = 0, total = 0;
      for (Vertex v : heavy.vertices) kept += w[v];
      for (Vertex v : r) total += w[v];
      CHECK(kept * heavy.colors_used >= total);
    }
  }
}

TEST_CASE("k-tree orders") {
  std::vector<Edge> e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4},
                         {1, 5}, {3, 5}, {4, 5}, {3, 6}, {4, 6}, {5, 6}, {3, 7}, {4, 7}, {5, 7}};
  Graph g(8, e);
  CHECK_FALSE(validate_ktree_order(g, {3, {0, 1, 2, 3, 4, 5, 6, 7}}).has_value());
  // Label 5 (id 4) placed before label 4 (id 3).
  auto bad = validate_ktree_order(g, {3, {0, 1, 2, 4, 3, 5, 6, 7}});
  REQUIRE(bad.has_value());
  CHECK(bad->index == 3);
  CHECK(bad->vertex == 4);
  CHECK_FALSE(validate_ktree_order(path(2), {1, {0, 1}}).has_value());
  CHECK_FALSE(validate_ktree_order(Graph(3), {0, {2, 0, 1}}).has_value());
  CHECK(validate_ktree_order(path(2), {0, {0, 1}}).has_value());
}

TEST_CASE("treedepth forests") {
  Graph g = path(3);
  TreedepthForest f{{1, -1, 1}};
  CHECK(f.height() == 2);
  CHECK(f.roots() == std::vector<Vertex>{1});
  CHECK(f.subtree(1) == std::vector<Vertex>{1, 0, 2});
  CHECK_FALSE(validate_treedepth(g, f, 2).has_value());
  CHECK(validate_treedepth(g, f, 1).has_value());
  CHECK(validate_treedepth(g, TreedepthForest{{-1, 0, -1}}, 3).has_value());
}

TEST_CASE("k-connectivity matches vertex-removal brute force") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 3000; ++t) {
    const int n = 1 + t % 8;
    const int pairs = n * (n - 1) / 2;
    auto g = from_mask(n, pairs ? rng() & ((1ull << pairs) - 1) : 0);
    for (int k = 1; k <= 3; ++k) {
      bool want = n > k;
      for (std::uint32_t cut = 0; want && cut < (1u << n); ++cut) {
        if (std::popcount(cut) >= k) continue;
        std::vector<bool> removed(n);
        for (int v = 0; v < n; ++v) removed[v] = cut >> v & 1;
        if (components(g, removed).size() != 1) want = false;
      }
      CHECK(is_k_connected(g, k) == want);
    }
  }
}

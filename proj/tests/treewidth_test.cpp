#include <doctest.h>

#include <map>
#include <set>

#include "flexicolor/io/generate.hpp"
#include "flexicolor/treewidth.hpp"
#include "support.hpp"

using namespace flexicolor;
using namespace flexicolor::treewidth;
using namespace testing;

namespace {

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::map<std::pair<Vertex, Color>, int> counts(const ColoringFamily& f) {
  std::map<std::pair<Vertex, Color>, int> out;
  for (const auto& m : f.members)
    for (Vertex v = 0; v < static_cast<Vertex>(m.size()); ++v) ++out[{v, m[v]}];
  return out;
}

bool admissible_everywhere(const Graph& g, const ListAssignment& lists, const ColoringFamily& f) {
  for (auto [u, v] : g.edges()) {
    SixColors at_u{}, at_v{};
    for (int i = 0; i < 6; ++i) {
      at_u[i] = f.members[i][u];
      at_v[i] = f.members[i][v];
    }
    if (!admissible_at(at_u, at_v, lists[u], lists[v])) return false;
  }
  return true;
}

io::Instance fig3() { return io::three_tree_example(); }

}  // namespace

TEST_CASE("tree pair families") {
  ListAssignment l({{1, 2}, {2, 3}, {1, 2}});
  auto f = tree_pair_family(path(3), l);
  REQUIRE(f.size() == 2);
  std::set<Coloring> got(f.members.begin(), f.members.end());
  CHECK(got == std::set<Coloring>{{1, 2, 1}, {2, 3, 2}});

  auto e = tree_pair_family(path(2), ListAssignment::uniform(2, {1, 2}));
  CHECK(std::set<Coloring>(e.members.begin(), e.members.end()) == std::set<Coloring>{{1, 2}, {2, 1}});

  CHECK_THROWS_AS(tree_pair_family(cycle(4), ListAssignment::uniform(4, {1, 2})), PreconditionError);
  CHECK_THROWS_AS(tree_pair_family(path(2), ListAssignment::uniform(2, {1, 2, 3})), PreconditionError);
}

TEST_CASE("extension at a new vertex follows the worked example") {
  SixColors at_u{1, 1, 2, 2, 3, 3}, at_v{2, 4, 1, 4, 1, 2};
  std::vector<Color> lu{1, 2, 3}, lv{1, 2, 4}, lw{1, 3, 4};
  REQUIRE(admissible_at(at_u, at_v, lu, lv));
  auto w = extend_phi(at_u, at_v, lu, lv, lw);
  CHECK(w == SixColors{4, 3, 3, 1, 4, 1});
}

TEST_CASE("extension with identical lists takes the remaining color") {
  std::vector<Color> l{1, 2, 3};
  SixColors at_u{1, 1, 2, 2, 3, 3}, at_v{2, 3, 1, 3, 1, 2};
  auto w = extend_phi(at_u, at_v, l, l, l);
  for (int i = 0; i < 6; ++i) CHECK(w[i] == 6 - at_u[i] - at_v[i]);
}

TEST_CASE("extension always succeeds on random admissible seeds") {
  std::mt19937_64 rng(4);
  auto draw = [&] {
    std::vector<Color> p{1, 2, 3, 4, 5};
    std::shuffle(p.begin(), p.end(), rng);
    p.resize(3);
    std::sort(p.begin(), p.end());
    return p;
  };
  for (int t = 0; t < 1000; ++t) {
    auto lu = draw(), lv = draw(), lw = draw();
    auto [at_u, at_v] = seed_pair(lu, lv);
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    SixColors pu{}, pv{};
    for (int i = 0; i < 6; ++i) {
      pu[i] = at_u[perm[i]];
      pv[i] = at_v[perm[i]];
    }
    REQUIRE(admissible_at(pu, pv, lu, lv));
    auto w = extend_phi(pu, pv, lu, lv, lw);
    CHECK(admissible_at(pu, w, lu, lw));
    CHECK(admissible_at(pv, w, lv, lw));
  }
}

TEST_CASE("six-coloring families on 2-trees") {
  auto l = ListAssignment::uniform(2, {1, 2, 3});
  auto edge = two_tree_family(path(2), {2, {0, 1}}, l);
  std::set<Coloring> pairs(edge.members.begin(), edge.members.end());
  CHECK(pairs.size() == 6);

  auto tri = two_tree_family(complete(3), {2, {0, 1, 2}}, ListAssignment::uniform(3, {1, 2, 3}));
  std::set<Coloring> perms(tri.members.begin(), tri.members.end());
  CHECK(perms.size() == 6);

  CHECK_THROWS_AS(two_tree_family(complete(3), {2, {0, 1, 2}}, ListAssignment::uniform(3, {1, 2})),
                  PreconditionError);

  std::mt19937_64 rng(8);
  for (int n : {5, 40, 2000, 20000}) {
    auto inst = io::random_ktree(n, 2, {}, io::RequestShape::Weighted, rng);
    auto f = two_tree_family(inst.graph, *inst.ktree, inst.lists);
    CHECK(f.multiplicity == 2);
    CHECK_NOTHROW(verify_family(inst.graph, inst.lists, f));
    CHECK(admissible_everywhere(inst.graph, inst.lists, f));
  }
}

TEST_CASE("build_SA on the 3-tree example") {
  auto inst = fig3();
  std::vector<Vertex> a{0, 1};
  CHECK(build_SA(inst.graph, *inst.ktree, a, 1) == std::vector<Vertex>{0, 1, 3, 4, 6, 7});
  CHECK(build_SA(inst.graph, *inst.ktree, {}, 3) == std::vector<Vertex>{3});
  std::vector<Vertex> too_small{0};
  CHECK_THROWS_AS(build_SA(inst.graph, *inst.ktree, too_small, 1), PreconditionError);
}

TEST_CASE("every clique meets the S_A sets in all subsets of the two sizes") {
  std::mt19937_64 rng(15);
  std::vector<io::Instance> cases{fig3()};
  for (int i = 0; i < 10; ++i) cases.push_back(io::random_ktree(9, 3, {}, io::RequestShape::Unweighted, rng));
  for (const auto& inst : cases) {
    const auto& order = *inst.ktree;
    const int k = order.width;
    auto back = back_neighbors(inst.graph, order);
    std::set<std::vector<Vertex>> cliques;
    std::vector<Vertex> first(order.sequence.begin(), order.sequence.begin() + k);
    std::sort(first.begin(), first.end());
    cliques.insert(first);
    for (std::size_t i = k; i < order.sequence.size(); ++i) {
      Vertex v = order.sequence[i];
      std::vector<Vertex> big = back[v];
      big.push_back(v);
      std::sort(big.begin(), big.end());
      for (std::size_t drop = 0; drop < big.size(); ++drop) {
        auto c = big;
        c.erase(c.begin() + drop);
        cliques.insert(c);
      }
    }
    for (int top = 1; top <= k; ++top) {
      std::vector<std::vector<Vertex>> sets;
      for (std::uint32_t m = 0; m < (1u << k); ++m) {
        const int size = std::popcount(m);
        if (size != k - top && size != k - top + 1) continue;
        std::vector<Vertex> a;
        for (int i = 0; i < k; ++i) if (m >> i & 1) a.push_back(first[i]);
        sets.push_back(build_SA(inst.graph, order, a, top));
      }
      for (const auto& clique : cliques) {
        std::set<std::vector<Vertex>> seen;
        for (const auto& s : sets) {
          std::vector<Vertex> meet;
          std::set_intersection(clique.begin(), clique.end(), s.begin(), s.end(), std::back_inserter(meet));
          seen.insert(meet);
        }
        std::set<std::vector<Vertex>> want;
        for (std::uint32_t m = 0; m < (1u << k); ++m) {
          const int size = std::popcount(m);
          if (size != k - top && size != k - top + 1) continue;
          std::vector<Vertex> sub;
          for (int i = 0; i < k; ++i) if (m >> i & 1) sub.push_back(clique[i]);
          want.insert(sub);
        }
        CHECK(seen == want);
      }
    }
  }
}

TEST_CASE("lambda families have uniform color frequency") {
  std::mt19937_64 rng(6);
  struct Case {
    int k;
    std::vector<int> parts;
  };
  for (const auto& c : std::vector<Case>{{1, {1, 1}}, {2, {3}}, {2, {2, 1}}, {3, {1, 3}}, {3, {2, 2}}, {4, {3, 2}},
                                         {4, {1, 1, 1, 1, 1}}}) {
    for (int rep = 0; rep < 3; ++rep) {
      auto inst = io::random_ktree(8, c.k, c.parts, io::RequestShape::Weighted, rng);
      auto f = lambda_family(inst.graph, *inst.ktree, *inst.lambda, inst.lists);
      CHECK(static_cast<std::int64_t>(f.size()) == factorial(c.k + 1));
      CHECK(f.multiplicity == factorial(c.k));
      CHECK_NOTHROW(verify_family(inst.graph, inst.lists, f));
      for (auto [key, count] : counts(f)) CHECK(count * (c.k + 1) == static_cast<int>(f.size()));
    }
  }

  auto inst = fig3();
  LambdaAssignment lambda{{1, 3}, {{1}, {2, 3, 4}}};
  auto f = lambda_family(inst.graph, *inst.ktree, lambda, ListAssignment::uniform(8, {1, 2, 3, 4}));
  for (auto [key, count] : counts(f)) CHECK(count * 4 == static_cast<int>(f.size()));

  LambdaAssignment too_wide{{4}, {{1, 2, 3, 4}}};
  CHECK_THROWS_AS(lambda_family(inst.graph, *inst.ktree, too_wide, ListAssignment::uniform(8, {1, 2, 3, 4})),
                  PreconditionError);
}

TEST_CASE("best member reaches the family average") {
  auto l = ListAssignment::uniform(3, {1, 2, 3});
  auto f = two_tree_family(complete(3), {2, {0, 1, 2}}, l);
  auto best = best_of_family(complete(3), l, f, Request(RequestKind::Weighted, {{1, 3, 10}}));
  CHECK(f.members[best.index][1] == 3);
  CHECK(best.satisfied == 10);

  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    auto inst = io::random_ktree(30, 2, {}, io::RequestShape::Weighted, rng);
    auto fam = two_tree_family(inst.graph, *inst.ktree, inst.lists);
    auto b = best_of_family(inst.graph, inst.lists, fam, inst.request);
    CHECK(3 * b.satisfied >= inst.request.total_weight());
  }
}

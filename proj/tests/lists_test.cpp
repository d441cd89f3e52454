#include <doctest.h>

#include "flexicolor/degree_choosable.hpp"
#include "flexicolor/oracle.hpp"
#include "support.hpp"

using namespace flexicolor;
using namespace testing;

namespace {

ListAssignment fig2_lists() { return ListAssignment({{1, 2}, {1, 2, 3}, {1, 2, 3}, {1, 3}}); }
Request fig2_request() { return Request(RequestKind::Unweighted, {{0, 2, 1}, {1, 1, 1}, {2, 1, 1}, {3, 3, 1}}); }

}  // namespace

TEST_CASE("lists are sorted and deduplicated") {
  ListAssignment l({{3, 1, 3}, {2}});
  CHECK(std::vector<Color>(l[0].begin(), l[0].end()) == std::vector<Color>{1, 3});
  CHECK(l.contains(0, 3));
  CHECK_FALSE(l.contains(1, 3));
  CHECK(l.max_list_size() == 2);
}

TEST_CASE("request invariants") {
  CHECK_THROWS_AS(Request(RequestKind::Unweighted, {{0, 1, 1}, {0, 2, 1}}), PreconditionError);
  CHECK_THROWS_AS(Request(RequestKind::UniquelyWeighted, {{0, 1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Request(RequestKind::Weighted, {{0, 1, -1}}), PreconditionError);
  Request r = fig2_request();
  CHECK(r.widespread(4));
  CHECK_FALSE(r.widespread(5));
  CHECK(r.total_weight() == 4);
  CHECK_THROWS_AS(r.validate(ListAssignment::uniform(4, {1, 2})), PreconditionError);
}

TEST_CASE("satisfied amount") {
  Graph g = path(2);
  auto lists = ListAssignment::uniform(2, {1, 2});
  CHECK(satisfied_amount(g, lists, {1, 2}, Request()) == 0);
  std::vector<std::pair<Vertex, Color>> wish{{0, 1}};
  CHECK(satisfied_amount(g, lists, {1, 2}, Request::unweighted(wish)) == 1);
  CHECK_THROWS_AS(satisfied_amount(g, lists, {1, 1}, Request()), InvalidColoring);
  CHECK_THROWS_AS(satisfied_amount(g, lists, {1, 3}, Request()), InvalidColoring);
}

TEST_CASE("no proper coloring of the diamond counterexample satisfies anything") {
  Graph g = diamond();
  auto lists = fig2_lists();
  std::int64_t seen = 0;
  for (Color a : lists[0])
    for (Color b : lists[1])
      for (Color c : lists[2])
        for (Color d : lists[3]) {
          Coloring col{a, b, c, d};
          if (!proper(g, col)) continue;
          ++seen;
          CHECK(satisfied_amount(g, lists, col, fig2_request()) == 0);
        }
  CHECK(seen > 0);
}

TEST_CASE("reduce_to_unique keeps one heaviest color") {
  Request r(RequestKind::Weighted, {{0, 1, 5}, {0, 2, 1}, {0, 3, 1}});
  auto u = reduce_to_unique(r);
  REQUIRE(u.entries().size() == 1);
  CHECK(u.entries()[0] == RequestEntry{0, 1, 5});
  CHECK(u.kind() == RequestKind::UniquelyWeighted);

  auto tie = reduce_to_unique(Request(RequestKind::Weighted, {{0, 1, 4}, {0, 2, 4}, {0, 3, 4}}));
  CHECK(tie.entries()[0] == RequestEntry{0, 1, 4});
  CHECK(tie.total_weight() * 3 == 12);

  Request k2(RequestKind::Weighted, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 1, 7}, {1, 2, 7}, {1, 3, 7}});
  auto kept = reduce_to_unique(k2);
  CHECK(kept.weight(0, 2) * 3 >= 6);
  CHECK(kept.weight(1, 1) * 3 >= 21);
  CHECK(reduce_to_unique(Request(RequestKind::Weighted, {{0, 1, 0}})).empty());
}

TEST_CASE("reduce_to_unique retains a 1/max-list share on random requests") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    std::vector<RequestEntry> e;
    for (Vertex v = 0; v < 6; ++v)
      for (Color c = 1; c <= 4; ++c)
        if (rng() % 2) e.push_back({v, c, static_cast<Weight>(rng() % 20)});
    Request r(RequestKind::Weighted, e);
    auto u = reduce_to_unique(r);
    CHECK(u.total_weight() * 4 >= r.total_weight());
    for (const auto& x : u.entries()) CHECK(x.weight == r.weight(x.vertex, x.color));
  }
}

TEST_CASE("degree-choosable colorings") {
  auto k3 = degree_choosable_coloring(complete(3), ListAssignment::uniform(3, {1, 2, 3}));
  REQUIRE(k3);
  CHECK(proper(complete(3), *k3));

  ListAssignment tight({{1, 2}, {1, 2, 3}, {1, 2, 3}, {1, 2}});
  auto d = degree_choosable_coloring(diamond(), tight);
  REQUIRE(d);
  CHECK_NOTHROW(check_list_coloring(diamond(), tight, *d));

  CHECK_FALSE(degree_choosable_coloring(complete(4), ListAssignment::uniform(4, {1, 2, 3})).has_value());
  CHECK_THROWS_AS(degree_choosable_coloring(complete(4), ListAssignment::uniform(4, {1, 2})), PreconditionError);
}

TEST_CASE("degree-choosable coloring agrees with the oracle on small instances") {
  std::mt19937_64 rng(9);
  int guaranteed = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    Graph g = random_connected(n, 0.45, rng);
    std::vector<std::vector<Color>> raw(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Color> palette{1, 2, 3, 4};
      std::shuffle(palette.begin(), palette.end(), rng);
      const int size = std::min(4, g.degree(v) + static_cast<int>(rng() % 2));
      if (size < g.degree(v)) goto skip;
      raw[v].assign(palette.begin(), palette.begin() + size);
    }
    {
      ListAssignment lists(raw);
      auto got = degree_choosable_coloring(g, lists);
      const bool exists = oracle::is_degree_choosable_here(g, lists);
      CHECK(got.has_value() == exists);
      if (got) CHECK_NOTHROW(check_list_coloring(g, lists, *got));
      if (!is_tight_gallai(g, lists)) {
        ++guaranteed;
        CHECK(got.has_value());
      }
    }
  skip:;
  }
  CHECK(guaranteed > 50);
}

TEST_CASE("precolor and extend") {
  auto lists = ListAssignment::uniform(2, {1, 2});
  std::vector<std::pair<Vertex, Color>> fix{{0, 1}};
  auto r = precolor_and_extend(path(2), lists, fix);
  REQUIRE(r.coloring);
  CHECK(*r.coloring == Coloring{1, 2});

  std::vector<std::pair<Vertex, Color>> both{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(precolor_and_extend(path(2), lists, both), PreconditionError);

  ListAssignment bow({{1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3}, {1, 2, 3}});
  std::vector<std::pair<Vertex, Color>> pend{{0, 3}};
  auto b = precolor_and_extend(bowtie(), bow, pend);
  REQUIRE(b.coloring);
  CHECK((*b.coloring)[0] == 3);
  CHECK_NOTHROW(check_list_coloring(bowtie(), bow, *b.coloring));

  auto k4 = precolor_and_extend(complete(4), ListAssignment::uniform(4, {1, 2, 3, 4}),
                                std::vector<std::pair<Vertex, Color>>{{0, 1}});
  REQUIRE(k4.coloring);
  auto cut = ListAssignment({{1}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
  auto fail = precolor_and_extend(complete(4), cut, std::vector<std::pair<Vertex, Color>>{{0, 1}});
  CHECK_FALSE(fail.coloring.has_value());
  CHECK(fail.infeasible_component == std::vector<Vertex>{1, 2, 3});
}

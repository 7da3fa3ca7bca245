#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "topoindex/canonical.hpp"
#include "topoindex/constructions.hpp"
#include "topoindex/enumeration.hpp"
#include "topoindex/unicyclic.hpp"

using namespace topo;
using doctest::Contains;

TEST_CASE("paths stars and cycles") {
  CHECK(path(1).edge_count() == 0);
  CHECK(path(5).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(star(1).edge_count() == 0);
  CHECK(star(5).degree(0) == 4);
  CHECK(classify(cycle(3)) == GraphClass::Unicyclic);
  CHECK(cycle(4).edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(path(0), std::invalid_argument);
  CHECK_THROWS_AS(star(0), std::invalid_argument);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("rooted tree invariants") {
  CHECK_THROWS_AS(RootedTree(cycle(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(RootedTree(path(3), 3), std::invalid_argument);
  CHECK_THROWS_AS(RootedTree(Graph(2), 0), std::invalid_argument);  // disconnected
  RootedTree t(path(3), 1);
  CHECK(t.root() == 1);
  CHECK(t.order() == 3);
}

TEST_CASE("broom shapes") {
  RootedTree b = broom(2, 1, 3);
  CHECK(b.order() == 7);
  CHECK(b.root() == 0);
  CHECK(classify(b.graph()) == GraphClass::Tree);
  CHECK(b.graph().degree(0) == 5);  // two path starts plus three leaves

  CHECK(canonical_form(broom(0, 0, 4).graph()) == canonical_form(star(5)));
  CHECK(canonical_form(broom(2, 1, 0).graph()) == canonical_form(path(4)));
  CHECK(canonical_form(broom(1, 1, 1).graph()) == canonical_form(star(4)));
  CHECK(broom(0, 0, 0).order() == 1);
  CHECK(single_vertex().order() == 1);
  CHECK_THROWS_AS(broom(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("cycle composition glues trees by their roots") {
  std::vector<RootedTree> singles{single_vertex(), single_vertex(), single_vertex()};
  CHECK(canonical_form(cycle_composition(3, singles)) == canonical_form(cycle(3)));

  Graph tadpole = cycle_composition(3, {broom(0, 0, 1), single_vertex(), single_vertex()});
  CHECK(canonical_form(tadpole) == canonical_form(Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}})));

  // order bookkeeping over a mixed selection
  for (const RootedTree& t1 : rooted_trees(4)) {
    for (const RootedTree& t2 : rooted_trees(2)) {
      Graph g = cycle_composition(4, {t1, single_vertex(), t2, t2});
      REQUIRE(g.vertex_count() == 4 + 3 + 1 + 1);
      REQUIRE(classify(g) == GraphClass::Unicyclic);
      REQUIRE(find_cycle(g).size() == 4);
    }
  }

  // two calls produce identical labelings
  Graph a = cycle_composition(3, {broom(1, 0, 2), broom(0, 0, 1), single_vertex()});
  Graph b = cycle_composition(3, {broom(1, 0, 2), broom(0, 0, 1), single_vertex()});
  CHECK(a.edges() == b.edges());

  CHECK_THROWS_AS(cycle_composition(3, {single_vertex()}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_composition(2, {single_vertex(), single_vertex()}),
                  std::invalid_argument);
}

TEST_CASE("extremal unicyclic graph for given order and diameter") {
  Graph g63 = extremal_unicyclic(6, 3);
  CHECK(g63.vertex_count() == 6);
  CHECK(diameter(g63) == 3);
  auto dec = decompose(g63);
  CHECK(dec.cycle.size() == 3);
  CHECK(dec.trees[0].order() == 3);
  CHECK(dec.trees[1].order() == 2);
  CHECK(dec.trees[2].order() == 1);

  auto dec74 = decompose(extremal_unicyclic(7, 4));
  CHECK(dec74.trees[0].order() == 4);  // path of 2 edges plus one extra leaf
  CHECK(dec74.trees[1].order() == 2);

  auto dec75 = decompose(extremal_unicyclic(7, 5));
  CHECK(dec75.trees[0].order() == 3);  // both arms are bare paths
  CHECK(dec75.trees[1].order() == 3);
  CHECK(dec75.trees[2].order() == 1);

  for (int n = 5; n <= 12; ++n) {
    for (int d = 3; d <= n - 2; ++d) {
      Graph g = extremal_unicyclic(n, d);
      REQUIRE(g.vertex_count() == n);
      REQUIRE(classify(g) == GraphClass::Unicyclic);
      REQUIRE(diameter(g) == d);
      REQUIRE(find_cycle(g).size() == 3);
    }
  }
}

TEST_CASE("extremal unicyclic small-diameter special cases") {
  CHECK(canonical_form(extremal_unicyclic(3, 1)) == canonical_form(cycle(3)));
  CHECK_THROWS_AS(extremal_unicyclic(4, 1), std::invalid_argument);

  // diameter 2 from order 6 on: triangle with all extra leaves on one vertex
  for (int n = 6; n <= 9; ++n) {
    Graph g = extremal_unicyclic(n, 2);
    REQUIRE(diameter(g) == 2);
    Graph want = cycle_composition(
        3, {broom(1, 0, n - 4), single_vertex(), single_vertex()});
    REQUIRE(canonical_form(g) == canonical_form(want));
  }

  CHECK_THROWS_WITH_AS(extremal_unicyclic(4, 2), Contains("C_4"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(extremal_unicyclic(5, 2), Contains("C_5"), std::invalid_argument);
  CHECK_THROWS_AS(extremal_unicyclic(8, 7), std::invalid_argument);
  CHECK_THROWS_AS(extremal_unicyclic(8, 0), std::invalid_argument);
  CHECK_THROWS_AS(extremal_unicyclic(3, 2), std::invalid_argument);
}

TEST_CASE("caterpillar tree") {
  CHECK(canonical_form(caterpillar_tree(5, 4)) == canonical_form(path(5)));
  Graph c = caterpillar_tree(7, 4);
  CHECK(c.vertex_count() == 7);
  CHECK(diameter(c) == 4);
  CHECK(c.degree(2) == 4);  // midpoint carries the extra leaves

  for (int n = 3; n <= 12; ++n) {
    for (int d = 2; d <= n - 1; ++d) {
      Graph t = caterpillar_tree(n, d);
      REQUIRE(classify(t) == GraphClass::Tree);
      REQUIRE(t.vertex_count() == n);
      REQUIRE(diameter(t) == d);
      // same tree as a broom rooted at the leaf-carrying vertex
      REQUIRE(canonical_form(t) ==
              canonical_form(broom(d / 2, d - d / 2, n - d - 1).graph()));
    }
  }

  CHECK_THROWS_AS(caterpillar_tree(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(caterpillar_tree(5, 5), std::invalid_argument);
}

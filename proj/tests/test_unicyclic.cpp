#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "topoindex/canonical.hpp"
#include "topoindex/constructions.hpp"
#include "topoindex/enumeration.hpp"
#include "topoindex/invariants.hpp"
#include "topoindex/unicyclic.hpp"

using namespace topo;

namespace {

Graph tadpole4() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

}  // namespace

TEST_CASE("decompose splits a unicyclic graph into cycle plus pendant trees") {
  auto dec = decompose(cycle(5));
  CHECK(dec.cycle == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(dec.trees.size() == 5);
  for (const auto& t : dec.trees) CHECK(t.order() == 1);

  dec = decompose(tadpole4());
  CHECK(dec.cycle == std::vector<int>{0, 1, 2});
  CHECK(dec.trees[0].order() == 2);
  CHECK(dec.trees[1].order() == 1);
  CHECK(dec.trees[2].order() == 1);

  // deeper pendant structure keeps its shape
  Graph g = cycle_composition(4, {broom(2, 0, 1), single_vertex(),
                                  broom(0, 0, 2), single_vertex()});
  dec = decompose(g);
  CHECK(dec.cycle.size() == 4);
  CHECK(dec.trees[0].order() == 4);
  CHECK(dec.trees[2].order() == 3);
  CHECK(canonical_form(dec.trees[0].graph()) == canonical_form(broom(2, 0, 1).graph()));

  CHECK_THROWS_AS(decompose(path(4)), std::invalid_argument);
}

TEST_CASE("decomposition rebuilds the original graph") {
  for (int n = 3; n <= 9; ++n) {
    for (const Graph& g : unicyclic_graphs(n)) {
      auto dec = decompose(g);
      Graph rebuilt = cycle_composition(static_cast<int>(dec.cycle.size()), dec.trees);
      REQUIRE(canonical_form(rebuilt) == canonical_form(g));
    }
  }
}

TEST_CASE("edge szeged via the decomposition formula") {
  CHECK(edge_szeged_formula(cycle(3)) == 3);
  CHECK(edge_szeged_formula(cycle(4)) == 4);
  CHECK(edge_szeged_formula(tadpole4()) == 5);
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : unicyclic_graphs(n)) {
      REQUIRE(edge_szeged_formula(g) == edge_szeged(g));
    }
  }
}

TEST_CASE("consolidation moves all pendant trees to one cycle vertex") {
  // two pendant leaves on opposite corners of a square end up together
  Graph spread(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 5}});
  Graph joined = consolidate_to_v1(spread);
  Graph want = cycle_composition(4, {broom(0, 0, 2), single_vertex(),
                                     single_vertex(), single_vertex()});
  CHECK(canonical_form(joined) == canonical_form(want));
  CHECK(edge_szeged(joined) <= edge_szeged(spread));

  // already consolidated graphs come back unchanged up to isomorphism
  Graph lolly = cycle_composition(3, {broom(1, 0, 2), single_vertex(), single_vertex()});
  CHECK(canonical_form(consolidate_to_v1(lolly)) == canonical_form(lolly));
  CHECK(canonical_form(consolidate_to_v1(cycle(6))) == canonical_form(cycle(6)));
}

TEST_CASE("consolidation never increases the edge szeged index") {
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : unicyclic_graphs(n)) {
      Graph h = consolidate_to_v1(g);
      long long before = edge_szeged(g);
      long long after = edge_szeged(h);
      REQUIRE(after <= before);
      REQUIRE((after == before) == (canonical_form(g) == canonical_form(h)));
    }
  }
}

TEST_CASE("predicted partition counts after gluing a tree") {
  // attaching anywhere strictly closer to one endpoint pushes every new edge
  // to that side
  Graph c4 = cycle(4);
  auto counts = composition_m_count(c4, 3, 3, {0, 1});
  auto base = edge_partition(c4, {0, 1});
  CHECK(counts.first == base.m_u + 3);
  CHECK(counts.second == base.m_v);

  // equidistant attachment point leaves both sides untouched
  Graph c5 = cycle(5);
  counts = composition_m_count(c5, 4, 3, {0, 1});
  base = edge_partition(c5, {0, 1});
  CHECK(counts.first == base.m_u);
  CHECK(counts.second == base.m_v);

  CHECK_THROWS_AS(composition_m_count(c4, -1, 0, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(composition_m_count(c4, 2, 9, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(composition_m_count(c4, 2, 0, {0, 2}), std::invalid_argument);
}

TEST_CASE("predicted partition counts match measurement on composed graphs") {
  // glue every small rooted tree onto every vertex of every connected base
  // graph of order 4 and compare with the built graph
  std::vector<Graph> bases;
  std::set<CanonicalForm> seen;
  for_each_connected_labeled_graph(4, [&](const Graph& g) {
    if (seen.insert(canonical_form(g)).second) bases.push_back(g);
  });
  REQUIRE(bases.size() == 6);

  for (const Graph& g0 : bases) {
    for (const RootedTree& t : rooted_trees(3)) {
      for (int at = 0; at < g0.vertex_count(); ++at) {
        // build the composite by hand
        std::vector<Edge> edges = g0.edges();
        std::vector<int> map(t.order());
        int fresh = g0.vertex_count();
        map[t.root()] = at;
        for (int v = 0; v < t.order(); ++v)
          if (v != t.root()) map[v] = fresh++;
        for (auto [u, v] : t.graph().edges()) edges.emplace_back(map[u], map[v]);
        Graph big(g0.vertex_count() + t.order() - 1, edges);

        for (Edge e : g0.edges()) {
          auto predicted = composition_m_count(g0, t.order() - 1, at, e);
          auto measured = edge_partition(big, e);
          REQUIRE(predicted.first == measured.m_u);
          REQUIRE(predicted.second == measured.m_v);
        }
      }
    }
  }
}

TEST_CASE("cycle distance profile closed form") {
  using P = std::pair<int, int>;
  CHECK(cycle_distance_profile(5, 2) == P{0, 2});
  CHECK(cycle_distance_profile(5, 3) == P{0, 1});
  CHECK(cycle_distance_profile(5, 4) == P{1, 0});
  CHECK(cycle_distance_profile(6, 2) == P{0, 2});
  CHECK(cycle_distance_profile(6, 3) == P{0, 2});
  CHECK(cycle_distance_profile(6, 4) == P{0, 0});
  CHECK(cycle_distance_profile(6, 5) == P{2, 0});
  CHECK(cycle_distance_profile(3, 2) == P{0, 1});

  for (int g = 3; g <= 12; ++g) {
    Graph c = cycle(g);
    auto d1 = bfs_distances(c, 0);
    auto d2 = bfs_distances(c, 1);
    auto dg = bfs_distances(c, g - 1);
    for (int j = 2; j <= g - 1; ++j) {
      P want{d2[j - 1] - d1[j - 1] + 1, dg[j - 1] - d1[j - 1] + 1};
      REQUIRE(cycle_distance_profile(g, j) == want);
    }
  }

  CHECK_THROWS_AS(cycle_distance_profile(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(cycle_distance_profile(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(cycle_distance_profile(2, 1), std::invalid_argument);
}

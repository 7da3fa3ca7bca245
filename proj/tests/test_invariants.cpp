#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "topoindex/constructions.hpp"
#include "topoindex/enumeration.hpp"
#include "topoindex/invariants.hpp"

using namespace topo;

namespace {

Graph tadpole4() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

}  // namespace

TEST_CASE("vertex partition counts") {
  auto p = vertex_partition(cycle(3), {0, 1});
  CHECK(p.n_u == 1);
  CHECK(p.n_v == 1);
  CHECK(p.n_0 == 1);

  p = vertex_partition(path(4), {1, 2});
  CHECK(p.n_u == 2);
  CHECK(p.n_v == 2);
  CHECK(p.n_0 == 0);

  p = vertex_partition(tadpole4(), {1, 2});
  CHECK(p.n_u == 1);
  CHECK(p.n_v == 1);
  CHECK(p.n_0 == 2);

  // order of the endpoints flips the sides
  auto q = vertex_partition(path(4), {2, 1});
  CHECK(q.n_u == 2);
  CHECK(q.n_v == 2);
  CHECK(q.edge == Edge{2, 1});

  CHECK_THROWS_AS(vertex_partition(path(4), {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(vertex_partition(Graph(3, {{0, 1}}), {0, 1}), std::invalid_argument);
}

TEST_CASE("edge partition counts include the edge itself as equidistant") {
  auto p = edge_partition(cycle(4), {0, 1});
  CHECK(p.m_u == 1);
  CHECK(p.m_v == 1);
  CHECK(p.m_0 == 2);

  p = edge_partition(cycle(3), {0, 1});
  CHECK(p.m_u == 1);
  CHECK(p.m_v == 1);
  CHECK(p.m_0 == 1);

  // pendant edge of a tree: nothing is closer to the leaf
  Graph cat = caterpillar_tree(7, 3);
  for (auto [u, v] : cat.edges()) {
    if (cat.degree(v) == 1) {
      auto q = edge_partition(cat, {v, u});
      CHECK(q.m_u == 0);
      CHECK(q.m_0 == 1);
      CHECK(q.m_v == cat.edge_count() - 1);
    }
  }
}

TEST_CASE("partition totals are conserved across families") {
  for (int n = 3; n <= 7; ++n) {
    std::vector<Graph> pool = unicyclic_graphs(n);
    for (const Graph& t : free_trees(n)) pool.push_back(t);
    for (const Graph& g : pool) {
      DistanceTable dt(g);
      for (Edge e : g.edges()) {
        auto vp = vertex_partition(g, dt, e);
        auto ep = edge_partition(g, dt, e);
        REQUIRE(vp.n_u + vp.n_v + vp.n_0 == g.vertex_count());
        REQUIRE(ep.m_u + ep.m_v + ep.m_0 == g.edge_count());
        REQUIRE(ep.m_0 >= 1);
      }
    }
  }
}

TEST_CASE("wiener index") {
  CHECK(wiener(path(4)) == 10);
  CHECK(wiener(star(4)) == 9);
  CHECK(wiener(cycle(5)) == 15);
  CHECK(wiener(Graph(1)) == 0);
  for (const Graph& g : unicyclic_graphs(7)) REQUIRE(wiener(g) == oracle::fw_wiener(g));
  for (const Graph& t : free_trees(7)) REQUIRE(wiener(t) == oracle::fw_wiener(t));
  CHECK_THROWS_AS(wiener(Graph(2)), std::invalid_argument);
}

TEST_CASE("edge wiener index") {
  CHECK(edge_wiener(path(4)) == 1);   // two adjacent pairs, one pair at distance 1
  CHECK(edge_wiener(star(6)) == 0);   // all edges pairwise adjacent
  CHECK(edge_wiener(cycle(5)) == 5);
  CHECK(edge_wiener(Graph(1)) == 0);
  CHECK(edge_wiener(path(2)) == 0);
}

TEST_CASE("szeged index") {
  CHECK(szeged(path(4)) == 10);
  CHECK(szeged(cycle(4)) == 16);
  CHECK(szeged(cycle(5)) == 20);
  CHECK(szeged(tadpole4()) == 8);
  CHECK(szeged(Graph(1)) == 0);
}

TEST_CASE("edge szeged index") {
  CHECK(edge_szeged(cycle(3)) == 3);
  CHECK(edge_szeged(cycle(4)) == 4);
  CHECK(edge_szeged(cycle(5)) == 20);
  CHECK(edge_szeged(tadpole4()) == 5);
  for (int n = 2; n <= 8; ++n) CHECK(edge_szeged(star(n)) == 0);
  CHECK(edge_szeged(Graph(1)) == 0);
}

TEST_CASE("transmission and parity helper") {
  CHECK(transmission(path(4), 0) == 6);
  CHECK(transmission(path(4), 1) == 4);
  CHECK(transmission(star(7), 0) == 6);
  CHECK(transmission(cycle(5), 2) == 6);
  for (int v = 0; v < 6; ++v)
    CHECK(transmission(cycle(6), v) == oracle::fw_transmission(cycle(6), v));
  CHECK_THROWS_AS(transmission(Graph(2), 0), std::invalid_argument);

  CHECK(parity_delta(0) == 0);
  CHECK(parity_delta(1) == 1);
  CHECK(parity_delta(4) == 0);
  CHECK(parity_delta(7) == 1);
  CHECK(parity_delta(-3) == 1);
}

TEST_CASE("indices are invariant under relabeling") {
  std::mt19937_64 rng(99);
  for (const Graph& g : unicyclic_graphs(8)) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabeled(g, perm);
    REQUIRE(wiener(h) == wiener(g));
    REQUIRE(edge_wiener(h) == edge_wiener(g));
    REQUIRE(szeged(h) == szeged(g));
    REQUIRE(edge_szeged(h) == edge_szeged(g));
  }
}

TEST_CASE("index report is consistent with the standalone functions") {
  std::vector<Graph> pool = unicyclic_graphs(6);
  for (const Graph& t : free_trees(6)) pool.push_back(t);
  pool.push_back(Graph(1));
  for (const Graph& g : pool) {
    IndexReport r = index_report(g);
    REQUIRE(r.wiener == wiener(g));
    REQUIRE(r.edge_wiener == edge_wiener(g));
    REQUIRE(r.szeged == szeged(g));
    REQUIRE(r.edge_szeged == edge_szeged(g));
    REQUIRE(r.vertex_partitions.size() == static_cast<size_t>(g.edge_count()));
    REQUIRE(r.edge_partitions.size() == static_cast<size_t>(g.edge_count()));
    long long sz = 0;
    for (const auto& vp : r.vertex_partitions) sz += 1LL * vp.n_u * vp.n_v;
    REQUIRE(sz == r.szeged);
  }
  CHECK_THROWS_AS(index_report(Graph(3, {{0, 1}})), std::invalid_argument);
}

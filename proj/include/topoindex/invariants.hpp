#pragma once

#include <cstdint>
#include <vector>

#include "topoindex/graph.hpp"

namespace topo {

// Split of the vertices of a connected graph by an edge e = (u, v):
// n_u counts vertices strictly closer to u, n_v those closer to v,
// n_0 the equidistant ones. Always n_u + n_v + n_0 = n.
struct VertexPartition {
  Edge edge;
  int n_u, n_v, n_0;
};

// Same split for edges, by the closer endpoint distance. The reference
// edge itself is equidistant and lands in m_0. Always m_u + m_v + m_0 = m.
struct EdgePartition {
  Edge edge;
  int m_u, m_v, m_0;
};

VertexPartition vertex_partition(const Graph& g, const DistanceTable& dt, Edge e);
EdgePartition edge_partition(const Graph& g, const DistanceTable& dt, Edge e);
VertexPartition vertex_partition(const Graph& g, Edge e);
EdgePartition edge_partition(const Graph& g, Edge e);

// Sum of distances over unordered vertex pairs.
long long wiener(const Graph& g);
long long wiener(const Graph& g, const DistanceTable& dt);

// Sum over unordered pairs of distinct edges of
// d(e, f) = min over endpoint pairs; adjacent edges are at distance 0.
long long edge_wiener(const Graph& g);
long long edge_wiener(const Graph& g, const DistanceTable& dt);

// Sum of n_u * n_v over edges.
long long szeged(const Graph& g);
long long szeged(const Graph& g, const DistanceTable& dt);

// Sum of m_u * m_v over edges.
long long edge_szeged(const Graph& g);
long long edge_szeged(const Graph& g, const DistanceTable& dt);

// Sum of distances from v to every vertex.
long long transmission(const Graph& g, int v);

// 1 for odd, 0 for even.
int parity_delta(long long x);

struct IndexReport {
  long long wiener = 0;
  long long edge_wiener = 0;
  long long szeged = 0;
  long long edge_szeged = 0;
  std::vector<VertexPartition> vertex_partitions;  // aligned with g.edges()
  std::vector<EdgePartition> edge_partitions;
};

IndexReport index_report(const Graph& g);

}  // namespace topo

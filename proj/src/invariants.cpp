#include "topoindex/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace topo {

namespace {

void require_connected(const DistanceTable& dt) {
  if (!dt.all_reachable())
    throw std::invalid_argument("index is undefined for disconnected graphs");
}

void require_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.first, e.second))
    throw std::invalid_argument("not an edge: (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ")");
}

int edge_to_vertex_distance(const DistanceTable& dt, Edge f, int v) {
  return std::min(dt(f.first, v), dt(f.second, v));
}

}  // namespace

VertexPartition vertex_partition(const Graph& g, const DistanceTable& dt, Edge e) {
  require_connected(dt);
  require_edge(g, e);
  auto [u, v] = e;
  VertexPartition p{e, 0, 0, 0};
  for (int w = 0; w < g.vertex_count(); ++w) {
    int du = dt(u, w), dv = dt(v, w);
    if (du < dv) ++p.n_u;
    else if (dv < du) ++p.n_v;
    else ++p.n_0;
  }
  return p;
}

EdgePartition edge_partition(const Graph& g, const DistanceTable& dt, Edge e) {
  require_connected(dt);
  require_edge(g, e);
  auto [u, v] = e;
  EdgePartition p{e, 0, 0, 0};
  for (Edge f : g.edges()) {
    int du = edge_to_vertex_distance(dt, f, u);
    int dv = edge_to_vertex_distance(dt, f, v);
    if (du < dv) ++p.m_u;
    else if (dv < du) ++p.m_v;
    else ++p.m_0;
  }
  return p;
}

VertexPartition vertex_partition(const Graph& g, Edge e) {
  return vertex_partition(g, DistanceTable(g), e);
}

EdgePartition edge_partition(const Graph& g, Edge e) {
  return edge_partition(g, DistanceTable(g), e);
}

long long wiener(const Graph& g, const DistanceTable& dt) {
  require_connected(dt);
  long long sum = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) sum += dt(u, v);
  return sum;
}

long long edge_wiener(const Graph& g, const DistanceTable& dt) {
  require_connected(dt);
  const auto& es = g.edges();
  long long sum = 0;
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      int d = std::min(edge_to_vertex_distance(dt, es[i], es[j].first),
                       edge_to_vertex_distance(dt, es[i], es[j].second));
      sum += d;
    }
  }
  return sum;
}

long long szeged(const Graph& g, const DistanceTable& dt) {
  require_connected(dt);
  long long sum = 0;
  for (Edge e : g.edges()) {
    auto p = vertex_partition(g, dt, e);
    sum += static_cast<long long>(p.n_u) * p.n_v;
  }
  return sum;
}

long long edge_szeged(const Graph& g, const DistanceTable& dt) {
  require_connected(dt);
  long long sum = 0;
  for (Edge e : g.edges()) {
    auto p = edge_partition(g, dt, e);
    sum += static_cast<long long>(p.m_u) * p.m_v;
  }
  return sum;
}

long long wiener(const Graph& g) { return wiener(g, DistanceTable(g)); }
long long edge_wiener(const Graph& g) { return edge_wiener(g, DistanceTable(g)); }
long long szeged(const Graph& g) { return szeged(g, DistanceTable(g)); }
long long edge_szeged(const Graph& g) { return edge_szeged(g, DistanceTable(g)); }

long long transmission(const Graph& g, int v) {
  auto dist = bfs_distances(g, v);
  long long sum = 0;
  for (int d : dist) {
    if (d == kUnreachable)
      throw std::invalid_argument("transmission is undefined for disconnected graphs");
    sum += d;
  }
  return sum;
}

int parity_delta(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

IndexReport index_report(const Graph& g) {
  DistanceTable dt(g);
  require_connected(dt);
  IndexReport r;
  r.wiener = wiener(g, dt);
  r.edge_wiener = edge_wiener(g, dt);
  r.vertex_partitions.reserve(g.edge_count());
  r.edge_partitions.reserve(g.edge_count());
  for (Edge e : g.edges()) {
    auto vp = vertex_partition(g, dt, e);
    auto ep = edge_partition(g, dt, e);
    r.szeged += static_cast<long long>(vp.n_u) * vp.n_v;
    r.edge_szeged += static_cast<long long>(ep.m_u) * ep.m_v;
    r.vertex_partitions.push_back(vp);
    r.edge_partitions.push_back(ep);
  }
  return r;
}

}  // namespace topo

#include "topoindex/unicyclic.hpp"

#include <queue>
#include <stdexcept>

#include "topoindex/invariants.hpp"

namespace topo {

UnicyclicDecomposition decompose(const Graph& g) {
  UnicyclicDecomposition dec;
  dec.cycle = find_cycle(g);
  std::vector<char> on_cycle(g.vertex_count(), 0);
  for (int v : dec.cycle) on_cycle[v] = 1;

  // Each component of G minus the cycle edges is a tree holding exactly one
  // cycle vertex, so a BFS from v_i that refuses to leave v_i along the
  // cycle collects T_i.
  for (int c : dec.cycle) {
    std::vector<int> local_id(g.vertex_count(), -1);
    std::vector<int> order{c};
    local_id[c] = 0;
    std::vector<Edge> edges;
    std::queue<int> q;
    q.push(c);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (x == c && on_cycle[y]) continue;
        if (local_id[y] >= 0) continue;
        local_id[y] = static_cast<int>(order.size());
        order.push_back(y);
        edges.emplace_back(local_id[x], local_id[y]);
        q.push(y);
      }
    }
    dec.trees.emplace_back(Graph(static_cast<int>(order.size()), std::move(edges)), 0);
  }
  return dec;
}

long long edge_szeged_formula(const Graph& g) {
  auto dec = decompose(g);
  const long long n = g.vertex_count();
  const long long r = static_cast<long long>(dec.cycle.size());
  long long sum = szeged(g);
  for (const auto& t : dec.trees) sum += transmission(t.graph(), t.root());
  sum -= n * n;
  sum += (r % 2 == 1) ? n * r : r;
  return sum;
}

Graph consolidate_to_v1(const Graph& g) {
  auto dec = decompose(g);
  const int r = static_cast<int>(dec.cycle.size());

  // merge all pendant trees at a common root
  int order = 1;
  for (const auto& t : dec.trees) order += t.order() - 1;
  std::vector<Edge> edges;
  int fresh = 1;
  for (const auto& t : dec.trees) {
    std::vector<int> map(t.order());
    map[t.root()] = 0;
    for (int v = 0; v < t.order(); ++v)
      if (v != t.root()) map[v] = fresh++;
    for (auto [u, v] : t.graph().edges()) edges.emplace_back(map[u], map[v]);
  }
  RootedTree merged(Graph(order, std::move(edges)), 0);

  std::vector<RootedTree> trees{std::move(merged)};
  for (int i = 1; i < r; ++i) trees.push_back(single_vertex());
  return cycle_composition(r, trees);
}

std::pair<long long, long long> composition_m_count(const Graph& g0, int g1_edge_count,
                                                    int attach_at, Edge e) {
  if (g1_edge_count < 0) throw std::invalid_argument("edge count must be nonnegative");
  if (attach_at < 0 || attach_at >= g0.vertex_count())
    throw std::invalid_argument("attach vertex out of range");
  DistanceTable dt(g0);
  auto base = edge_partition(g0, dt, e);
  const int du = dt(e.first, attach_at);
  const int dv = dt(e.second, attach_at);
  long long m_u = base.m_u, m_v = base.m_v;
  // Glued edges follow their attachment point: they all side with whichever
  // endpoint of e is closer to it, and none of them is equidistant.
  if (du < dv) m_u += g1_edge_count;
  else if (dv < du) m_v += g1_edge_count;
  return {m_u, m_v};
}

std::pair<int, int> cycle_distance_profile(int g, int j) {
  if (g < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  if (j < 2 || j > g - 1)
    throw std::invalid_argument("position must satisfy 2 <= j <= g-1");
  if (g % 2 == 0) {
    const int h = g / 2;
    if (j <= h) return {0, 2};
    if (j == h + 1) return {0, 0};
    return {2, 0};
  }
  if (j <= (g - 1) / 2) return {0, 2};
  if (j == (g + 1) / 2) return {0, 1};
  if (j == (g + 3) / 2) return {1, 0};
  return {2, 0};
}

}  // namespace topo

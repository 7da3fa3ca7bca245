#include "topoindex/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace topo {

namespace {

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree: return "tree";
    case GraphClass::Unicyclic: return "unicyclic";
    case GraphClass::Other: return "other";
  }
  return "other";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loop edge " + edge_str(u, v));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + edge_str(u, v) +
                                  " with n=" + std::to_string(n));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw std::invalid_argument("duplicate edge " +
                                  edge_str(edges[i].first, edges[i].second));
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n)
    throw std::invalid_argument("bfs source out of range: " + std::to_string(source));
  std::vector<int> dist(n, kUnreachable);
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.vertex_count()) {
  d_.resize(static_cast<size_t>(n_) * n_);
  for (int v = 0; v < n_; ++v) {
    auto row = bfs_distances(g, v);
    std::copy(row.begin(), row.end(), d_.begin() + static_cast<size_t>(v) * n_);
  }
}

bool DistanceTable::all_reachable() const {
  return std::find(d_.begin(), d_.end(), kUnreachable) == d_.end();
}

bool is_connected(const Graph& g) {
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v);
    for (int d : dist) {
      if (d == kUnreachable) throw std::invalid_argument("diameter of disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

GraphClass classify(const Graph& g) {
  if (!is_connected(g)) return GraphClass::Other;
  const int n = g.vertex_count(), m = g.edge_count();
  if (m == n - 1) return GraphClass::Tree;
  if (m == n) return GraphClass::Unicyclic;
  return GraphClass::Other;
}

std::vector<int> find_cycle(const Graph& g) {
  if (classify(g) != GraphClass::Unicyclic)
    throw std::invalid_argument("find_cycle requires a unicyclic graph");
  const int n = g.vertex_count();

  // Strip leaves repeatedly; what survives is exactly the cycle.
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::queue<int> q;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) q.push(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    removed[v] = 1;
    for (int w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) q.push(w);
    }
  }

  int start = -1;
  for (int v = 0; v < n && start < 0; ++v)
    if (!removed[v]) start = v;

  std::vector<int> on_cycle_nbrs;
  for (int w : g.neighbors(start))
    if (!removed[w]) on_cycle_nbrs.push_back(w);
  // neighbors() is sorted, so the first surviving neighbor gives the
  // lexicographically smaller of the two walk directions.
  std::vector<int> cycle{start};
  int prev = start, cur = on_cycle_nbrs.front();
  while (cur != start) {
    cycle.push_back(cur);
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return cycle;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(n, std::move(edges));
}

}  // namespace topo

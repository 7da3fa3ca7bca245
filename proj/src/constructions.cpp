#include "topoindex/constructions.hpp"

#include <stdexcept>
#include <utility>

namespace topo {

RootedTree::RootedTree(Graph graph, int root) : graph_(std::move(graph)), root_(root) {
  if (root_ < 0 || root_ >= graph_.vertex_count())
    throw std::invalid_argument("root out of range");
  if (classify(graph_) != GraphClass::Tree)
    throw std::invalid_argument("rooted tree requires a tree");
}

Graph path(int k) {
  if (k < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k, std::move(edges));
}

Graph star(int k) {
  if (k < 1) throw std::invalid_argument("star needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 1; i < k; ++i) edges.emplace_back(0, i);
  return Graph(k, std::move(edges));
}

Graph cycle(int g) {
  if (g < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < g; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, g - 1);
  return Graph(g, std::move(edges));
}

RootedTree broom(int l1, int l2, int a) {
  if (l1 < 0 || l2 < 0 || a < 0) throw std::invalid_argument("broom parameters must be nonnegative");
  const int n = 1 + l1 + l2 + a;
  std::vector<Edge> edges;
  for (int i = 1; i <= l1; ++i) edges.emplace_back(i == 1 ? 0 : i - 1, i);
  for (int i = 1; i <= l2; ++i) edges.emplace_back(i == 1 ? 0 : l1 + i - 1, l1 + i);
  for (int i = 0; i < a; ++i) edges.emplace_back(0, 1 + l1 + l2 + i);
  return RootedTree(Graph(n, std::move(edges)), 0);
}

RootedTree single_vertex() { return RootedTree(Graph(1), 0); }

Graph cycle_composition(int g, const std::vector<RootedTree>& trees) {
  if (g < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  if (static_cast<int>(trees.size()) != g)
    throw std::invalid_argument("need exactly one rooted tree per cycle vertex");
  int n = g;
  for (const auto& t : trees) n += t.order() - 1;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < g; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, g - 1);
  int fresh = g;
  for (int i = 0; i < g; ++i) {
    const auto& t = trees[i];
    // map: root -> cycle vertex i, other vertices -> fresh ids in label order
    std::vector<int> map(t.order());
    map[t.root()] = i;
    for (int v = 0; v < t.order(); ++v)
      if (v != t.root()) map[v] = fresh++;
    for (auto [u, v] : t.graph().edges()) edges.emplace_back(map[u], map[v]);
  }
  return Graph(n, std::move(edges));
}

Graph extremal_unicyclic(int n, int d) {
  if (d == 1) {
    if (n == 3) return cycle(3);
    throw std::invalid_argument("diameter 1 requires n = 3");
  }
  if (d == 2 && (n == 4 || n == 5)) {
    throw std::invalid_argument(
        "no unique minimizer known for n=" + std::to_string(n) +
        ", d=2: the candidates are C_" + std::to_string(n) + " and the triangle with " +
        (n == 4 ? std::string("one pendant edge") : std::string("two pendant edges at one vertex")) +
        "; evaluate both via the search harness");
  }
  if (d < 2 || d > n - 2)
    throw std::invalid_argument("diameter must satisfy 2 <= d <= n-2 (got n=" +
                                std::to_string(n) + ", d=" + std::to_string(d) + ")");
  const int hi = (d - 1 + 1) / 2;  // ceil((d-1)/2)
  const int lo = (d - 1) / 2;
  return cycle_composition(3, {broom(hi, 0, n - d - 2), broom(lo, 0, 0), single_vertex()});
}

Graph caterpillar_tree(int n, int d) {
  if (d < 2 || d > n - 1)
    throw std::invalid_argument("diameter must satisfy 2 <= d <= n-1 (got n=" +
                                std::to_string(n) + ", d=" + std::to_string(d) + ")");
  std::vector<Edge> edges;
  for (int i = 0; i < d; ++i) edges.emplace_back(i, i + 1);
  for (int i = d + 1; i < n; ++i) edges.emplace_back(d / 2, i);
  return Graph(n, std::move(edges));
}

}  // namespace topo

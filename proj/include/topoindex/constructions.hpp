#pragma once

#include <vector>

#include "topoindex/graph.hpp"

namespace topo {

// A tree with a distinguished root vertex.
class RootedTree {
 public:
  RootedTree(Graph graph, int root);
  const Graph& graph() const { return graph_; }
  int root() const { return root_; }
  int order() const { return graph_.vertex_count(); }

 private:
  Graph graph_;
  int root_;
};

Graph path(int k);   // P_k on vertices 0..k-1 in path order
Graph star(int k);   // S_k: center 0 with k-1 leaves
Graph cycle(int g);  // C_g on vertices 0..g-1 in cycle order

// Two paths with l1 and l2 edges plus a extra leaves, all hanging off a
// common root. broom(0, 0, a) is the star S_{a+1} rooted at its center.
// Root is vertex 0; the first path uses 1..l1, the second l1+1..l1+l2,
// the leaves come last.
RootedTree broom(int l1, int l2, int a);

RootedTree single_vertex();

// Glue tree i onto vertex i of C_g by its root. Cycle vertices keep ids
// 0..g-1; each tree's non-root vertices are appended in increasing label
// order, tree by tree.
Graph cycle_composition(int g, const std::vector<RootedTree>& trees);

// The unicyclic graph of order n and diameter d minimizing the edge-Szeged
// index: a triangle carrying a broom with a path of ceil((d-1)/2) edges and
// n-d-2 extra leaves on one vertex and a path of floor((d-1)/2) edges on the
// next. Defined for d = 1 (n = 3 only), d = 2 with n >= 6, and
// 3 <= d <= n-2. For (n, d) in {(4, 2), (5, 2)} two graphs tie and the
// builder refuses; use the search harness to evaluate both.
Graph extremal_unicyclic(int n, int d);

// The tree of order n and diameter d minimizing the Wiener index: a path
// v_0..v_d with n-d-1 extra leaves attached at v_floor(d/2).
Graph caterpillar_tree(int n, int d);

}  // namespace topo

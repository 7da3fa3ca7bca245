#pragma once

#include <string>
#include <utility>
#include <vector>

namespace topo {

using Edge = std::pair<int, int>;

enum class GraphClass { Tree, Unicyclic, Other };

std::string to_string(GraphClass c);

// Simple undirected graph over dense vertex ids 0..n-1. Immutable after
// construction. The constructor rejects loops, duplicate edges and
// out-of-range endpoints; edges are stored normalized (u < v) and sorted.
class Graph {
 public:
  explicit Graph(int n, std::vector<Edge> edges = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Marks vertices in other components in distance vectors and tables.
inline constexpr int kUnreachable = -1;

std::vector<int> bfs_distances(const Graph& g, int source);

// All-pairs hop distances, computed by BFS from every vertex.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);
  int operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }
  bool all_reachable() const;
  int size() const { return n_; }

 private:
  int n_;
  std::vector<int> d_;
};

bool is_connected(const Graph& g);

// Largest hop distance over all vertex pairs. Throws on disconnected input.
int diameter(const Graph& g);

// Tree: connected with m = n-1. Unicyclic: connected with m = n.
// Everything else (including disconnected graphs) is Other.
GraphClass classify(const Graph& g);

// The unique cycle of a unicyclic graph as a vertex sequence, rotated and
// reflected so the sequence is lexicographically minimal for the given
// labeling. Throws unless classify(g) == Unicyclic.
std::vector<int> find_cycle(const Graph& g);

// perm[old_id] = new_id; must be a permutation of 0..n-1.
Graph relabeled(const Graph& g, const std::vector<int>& perm);

}  // namespace topo

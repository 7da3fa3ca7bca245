#include "topoindex/enumeration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "topoindex/canonical.hpp"

namespace topo {

namespace {

// Successor in the decreasing lexicographic order of canonical sequences:
// find the last entry p of depth > 1, the last earlier entry q one level
// shallower, and repeat the block starting at q from p onward.
bool next_level_sequence(std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (s[i] > 1) {
      p = i;
      break;
    }
  }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i) {
    if (s[i] == s[p] - 1) {
      q = i;
      break;
    }
  }
  for (int i = p; i < n; ++i) s[i] = s[i - (p - q)];
  return true;
}

std::vector<int> subtree_sequence(const std::vector<std::vector<int>>& children,
                                  int v, int depth) {
  std::vector<std::vector<int>> subs;
  for (int c : children[v]) subs.push_back(subtree_sequence(children, c, depth + 1));
  std::sort(subs.begin(), subs.end(), std::greater<>());
  std::vector<int> out{depth};
  for (const auto& sub : subs) out.insert(out.end(), sub.begin(), sub.end());
  return out;
}

}  // namespace

LevelSequence::LevelSequence(std::vector<int> depths) : depths_(std::move(depths)) {
  if (depths_.empty()) throw std::invalid_argument("level sequence must be nonempty");
  if (depths_[0] != 0) throw std::invalid_argument("level sequence must start at depth 0");
  for (size_t i = 1; i < depths_.size(); ++i) {
    if (depths_[i] < 1 || depths_[i] > depths_[i - 1] + 1)
      throw std::invalid_argument("level sequence entry " + std::to_string(i) +
                                  " breaks the depth rule");
  }
}

RootedTree tree_from_level_sequence(const LevelSequence& s) {
  const auto& d = s.depths();
  const int n = s.order();
  std::vector<Edge> edges;
  std::vector<int> last_at_depth(n, -1);
  last_at_depth[0] = 0;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(last_at_depth[d[i] - 1], i);
    last_at_depth[d[i]] = i;
  }
  return RootedTree(Graph(n, std::move(edges)), 0);
}

LevelSequence canonical_level_sequence(const RootedTree& t) {
  const Graph& g = t.graph();
  const int n = g.vertex_count();
  std::vector<std::vector<int>> children(n);
  std::vector<int> parent(n, -1);
  std::vector<int> stack{t.root()};
  std::vector<char> seen(n, 0);
  seen[t.root()] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        children[v].push_back(w);
        stack.push_back(w);
      }
    }
  }
  return LevelSequence(subtree_sequence(children, t.root(), 0));
}

void for_each_rooted_tree(int k, const std::function<void(const RootedTree&)>& fn) {
  if (k < 1) throw std::invalid_argument("order must be at least 1");
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  do {
    fn(tree_from_level_sequence(LevelSequence(s)));
  } while (next_level_sequence(s));
}

void for_each_free_tree(int n, std::optional<int> d,
                        const std::function<void(const Graph&)>& fn) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  if (d && (*d < 1 || *d > n - 1))
    throw std::invalid_argument("diameter filter must satisfy 1 <= d <= n-1");
  std::set<CanonicalForm> seen;
  for_each_rooted_tree(n, [&](const RootedTree& t) {
    if (!seen.insert(canonical_form(t.graph())).second) return;
    if (d && diameter(t.graph()) != *d) return;
    fn(t.graph());
  });
}

namespace {

using TreeId = std::pair<int, int>;  // (order, index into rooted_trees(order))

bool dihedral_minimal(const std::vector<TreeId>& seq) {
  const int g = static_cast<int>(seq.size());
  std::vector<TreeId> probe(g);
  for (int dir = 0; dir < 2; ++dir) {
    for (int rot = 0; rot < g; ++rot) {
      if (dir == 0 && rot == 0) continue;
      for (int i = 0; i < g; ++i) {
        int j = dir == 0 ? (i + rot) % g : (g - i + rot) % g;
        probe[i] = seq[j];
      }
      if (probe < seq) return false;
    }
  }
  return true;
}

void generate_unicyclic(int n, std::optional<int> girth,
                        const std::function<void(const Graph&)>& fn) {
  if (n < 3) throw std::invalid_argument("unicyclic graphs need at least 3 vertices");
  if (girth && (*girth < 3))
    throw std::invalid_argument("girth filter must be at least 3");
  std::vector<std::vector<RootedTree>> trees_by_order(n - 2);
  for (int k = 1; k <= n - 2; ++k) trees_by_order[k - 1] = rooted_trees(k);

  int g_lo = girth ? *girth : 3;
  int g_hi = girth ? *girth : n;
  for (int g = g_lo; g <= std::min(g_hi, n); ++g) {
    std::vector<TreeId> seq(g);
    std::vector<RootedTree> picked;
    auto rec = [&](auto&& self, int pos, int used) -> void {
      if (pos == g) {
        if (used != n || !dihedral_minimal(seq)) return;
        picked.clear();
        for (auto [k, idx] : seq) picked.push_back(trees_by_order[k - 1][idx]);
        fn(cycle_composition(g, picked));
        return;
      }
      const int remaining_slots = g - pos - 1;
      for (int k = 1; used + k + remaining_slots <= n; ++k) {
        for (int idx = 0; idx < static_cast<int>(trees_by_order[k - 1].size()); ++idx) {
          seq[pos] = {k, idx};
          self(self, pos + 1, used + k);
        }
      }
    };
    rec(rec, 0, 0);
  }
}

}  // namespace

void for_each_unicyclic(int n, std::optional<int> d, std::optional<int> girth,
                        const std::function<void(const Graph&)>& fn) {
  if (d && (*d < 1 || *d > n - 1))
    throw std::invalid_argument("diameter filter must satisfy 1 <= d <= n-1");
  std::set<CanonicalForm> seen;
  generate_unicyclic(n, girth, [&](const Graph& g) {
    if (!seen.insert(canonical_form(g)).second) return;
    if (d && diameter(g) != *d) return;
    fn(g);
  });
}

namespace detail {

void for_each_unicyclic_raw(int n, const std::function<void(const Graph&)>& fn) {
  generate_unicyclic(n, std::nullopt, fn);
}

}  // namespace detail

std::vector<RootedTree> rooted_trees(int k) {
  std::vector<RootedTree> out;
  for_each_rooted_tree(k, [&](const RootedTree& t) { out.push_back(t); });
  return out;
}

std::vector<Graph> free_trees(int n, std::optional<int> d) {
  std::vector<Graph> out;
  for_each_free_tree(n, d, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> unicyclic_graphs(int n, std::optional<int> d, std::optional<int> girth) {
  std::vector<Graph> out;
  for_each_unicyclic(n, d, girth, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void for_each_connected_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 8) throw std::invalid_argument("labeled sweep supports 1 <= n <= 8");
  const int bits = n * (n - 1) / 2;
  std::vector<Edge> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  for (uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
    // quick connectivity probe on the adjacency masks before building
    uint64_t adj[8] = {};
    for (int b = 0; b < bits; ++b) {
      if (mask >> b & 1) {
        adj[slots[b].first] |= 1ULL << slots[b].second;
        adj[slots[b].second] |= 1ULL << slots[b].first;
      }
    }
    uint64_t reach = 1, frontier = 1;
    while (frontier) {
      uint64_t next = 0;
      for (int v = 0; v < n; ++v)
        if (frontier >> v & 1) next |= adj[v];
      frontier = next & ~reach;
      reach |= next;
    }
    if (reach != (1ULL << n) - 1) continue;
    std::vector<Edge> edges;
    for (int b = 0; b < bits; ++b)
      if (mask >> b & 1) edges.push_back(slots[b]);
    fn(Graph(n, std::move(edges)));
  }
}

}  // namespace topo

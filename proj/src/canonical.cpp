#include "topoindex/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "topoindex/graph6.hpp"

namespace topo {

namespace {

// Colors are canonical ranks: vertices sorted by (color, sorted neighbor
// colors) and re-ranked until stable. The old color is the primary sort key,
// so refinement only ever splits cells in place and the rank order itself is
// label-independent.
void refine_colors(const Graph& g, std::vector<int>& color) {
  const int n = g.vertex_count();
  using Key = std::pair<int, std::vector<int>>;
  std::vector<std::pair<Key, int>> keyed(n);
  for (;;) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> nc;
      nc.reserve(g.neighbors(v).size());
      for (int w : g.neighbors(v)) nc.push_back(color[w]);
      std::sort(nc.begin(), nc.end());
      keyed[v] = {{color[v], std::move(nc)}, v};
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> next(n);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++rank;
      next[keyed[i].second] = rank;
    }
    if (next == color) return;
    color = std::move(next);
  }
}

struct Searcher {
  const Graph& g;
  int n;
  std::vector<uint64_t> nbr_mask;
  std::vector<uint64_t> best_bits;
  std::vector<int> best_labels;
  bool have_best = false;

  explicit Searcher(const Graph& graph) : g(graph), n(graph.vertex_count()) {
    nbr_mask.assign(n, 0);
    for (auto [u, v] : g.edges()) {
      nbr_mask[u] |= 1ULL << v;
      nbr_mask[v] |= 1ULL << u;
    }
  }

  // color is discrete here: color[v] is the candidate new label of v.
  // Bits are packed in graph6 order so comparing word vectors compares the
  // resulting graph6 strings.
  void consider(const std::vector<int>& color) {
    std::vector<uint64_t> bits((static_cast<size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
    for (auto [a, b] : g.edges()) {
      int i = color[a], j = color[b];
      if (i > j) std::swap(i, j);
      int p = j * (j - 1) / 2 + i;
      bits[p >> 6] |= 1ULL << (63 - (p & 63));
    }
    if (!have_best || bits < best_bits) {
      best_bits = std::move(bits);
      best_labels = color;
      have_best = true;
    }
  }

  void search(const std::vector<int>& color) {
    int target = -1;
    std::vector<int> counts(n, 0);
    for (int v = 0; v < n; ++v) ++counts[color[v]];
    for (int v = 0; v < n; ++v) {
      if (counts[color[v]] > 1 && (target < 0 || color[v] < color[target])) target = v;
    }
    if (target < 0) {
      consider(color);
      return;
    }
    const int cell = color[target];
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (color[v] == cell) members.push_back(v);

    // Swapping two vertices with identical neighborhoods (ignoring each
    // other) is an automorphism, so only one branch per such class can
    // produce a new leaf.
    std::vector<int> branch;
    for (int u : members) {
      bool redundant = false;
      for (int w : branch) {
        uint64_t strip = ~((1ULL << u) | (1ULL << w));
        if ((nbr_mask[u] & strip) == (nbr_mask[w] & strip)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) branch.push_back(u);
    }

    for (int u : branch) {
      std::vector<int> next(color);
      for (int v = 0; v < n; ++v)
        if (v != u && next[v] >= cell) ++next[v];
      refine_colors(g, next);
      search(next);
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62)
    throw std::invalid_argument("canonical_form supports at most 62 vertices");
  std::vector<int> color(n, 0);
  refine_colors(g, color);
  Searcher s(g);
  s.search(color);
  return relabeled(g, s.best_labels);
}

CanonicalForm canonical_form(const Graph& g) {
  return graph6_encode(canonical_graph(g));
}

}  // namespace topo

#pragma once

#include <utility>
#include <vector>

#include "topoindex/constructions.hpp"
#include "topoindex/graph.hpp"

namespace topo {

// View of a unicyclic graph as its cycle v_1..v_r plus the pendant tree
// hanging off each cycle vertex. trees[i] is relabeled standalone with the
// cycle vertex as root 0 and the rest in breadth-first order; a bare cycle
// vertex contributes a one-vertex tree.
struct UnicyclicDecomposition {
  std::vector<int> cycle;        // original labels, find_cycle order
  std::vector<RootedTree> trees;  // aligned with cycle
};

UnicyclicDecomposition decompose(const Graph& g);

// Edge-Szeged index computed through the cycle decomposition: the Szeged
// index plus the root transmissions of the pendant trees, adjusted by
// n^2 - nr for odd cycle length r and by n^2 - r for even r. Agrees with
// the definitional edge_szeged on every unicyclic graph.
long long edge_szeged_formula(const Graph& g);

// Move every pendant tree to the anchor vertex of the cycle, keeping each
// tree's shape. Never increases the edge-Szeged index; preserves it exactly
// when all trees already share one cycle vertex.
Graph consolidate_to_v1(const Graph& g);

// Edge counts (m_u_total, m_v_total) of the partition by e = (u, v) after a
// tree with g1_edge_count edges is glued onto vertex u of g0. Everything
// about the glued tree is determined by its edge count: its edges side with
// whichever endpoint of e is closer to u and never land in m_0.
std::pair<long long, long long> composition_m_count(const Graph& g0, int g1_edge_count,
                                                    int u, Edge e);

// For the cycle C_g with vertices v_1..v_g and 2 <= j <= g-1, the pair
// (d(v_2, v_j) - d(v_1, v_j) + 1, d(v_g, v_j) - d(v_1, v_j) + 1).
// Closed form; values are in {0, 1, 2}.
std::pair<int, int> cycle_distance_profile(int g, int j);

}  // namespace topo

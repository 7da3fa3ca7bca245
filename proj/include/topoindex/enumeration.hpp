#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "topoindex/constructions.hpp"
#include "topoindex/graph.hpp"

namespace topo {

// Depth sequence of a rooted tree in depth-first order, root depth 0.
// Valid sequences start with 0 and each later entry lies between 1 and its
// predecessor plus one. The canonical sequence of a tree is the
// lexicographically largest one, i.e. children are visited in decreasing
// subtree order.
class LevelSequence {
 public:
  explicit LevelSequence(std::vector<int> depths);
  const std::vector<int>& depths() const { return depths_; }
  int order() const { return static_cast<int>(depths_.size()); }
  bool operator==(const LevelSequence&) const = default;

 private:
  std::vector<int> depths_;
};

RootedTree tree_from_level_sequence(const LevelSequence& s);
LevelSequence canonical_level_sequence(const RootedTree& t);

// All rooted trees on k vertices up to rooted isomorphism, one per class,
// in decreasing canonical-sequence order (path first, star last).
void for_each_rooted_tree(int k, const std::function<void(const RootedTree&)>& fn);

// All trees on n vertices up to isomorphism, optionally only those of
// diameter d.
void for_each_free_tree(int n, std::optional<int> d,
                        const std::function<void(const Graph&)>& fn);

// All unicyclic graphs on n vertices up to isomorphism, optionally filtered
// by diameter and/or girth. Generated as a cycle with a rooted tree glued on
// each cycle vertex, with tree sequences deduplicated under rotation and
// reflection of the cycle.
void for_each_unicyclic(int n, std::optional<int> d, std::optional<int> girth,
                        const std::function<void(const Graph&)>& fn);

std::vector<RootedTree> rooted_trees(int k);
std::vector<Graph> free_trees(int n, std::optional<int> d = std::nullopt);
std::vector<Graph> unicyclic_graphs(int n, std::optional<int> d = std::nullopt,
                                    std::optional<int> girth = std::nullopt);

// Every labeled graph on n vertices whose edge set forms a connected graph,
// by brute force over all 2^(n(n-1)/2) edge subsets. Desk scale only.
void for_each_connected_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

namespace detail {

// Unicyclic generation stream before the final isomorphism-class
// deduplication; exposed so tests can assert the rotation/reflection
// filtering alone already emits each class exactly once.
void for_each_unicyclic_raw(int n, const std::function<void(const Graph&)>& fn);

}  // namespace detail

}  // namespace topo

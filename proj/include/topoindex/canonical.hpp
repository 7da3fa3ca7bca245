#pragma once

#include <string>

#include "topoindex/graph.hpp"

namespace topo {

// Stable isomorphism-class key: the graph6 string of the graph under its
// canonical labeling. Two graphs are isomorphic iff their forms are equal.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Graph& g);

// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g);

}  // namespace topo

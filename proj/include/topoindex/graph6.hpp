#pragma once

#include <string>

#include "topoindex/graph.hpp"

namespace topo {

// Canonical ascii encoding of the graph for the given labeling.
// One line per graph, no trailing newline.
std::string graph6_encode(const Graph& g);

// Strict decoder: validates the character range, the exact line length
// and that padding bits are zero. Accepts an optional ">>graph6<<" header.
Graph graph6_decode(const std::string& line);

// Plain text: first line "n m", then m lines "u v".
std::string edgelist_encode(const Graph& g);
Graph edgelist_decode(const std::string& text);

}  // namespace topo

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "topoindex/batch.hpp"
#include "topoindex/graph.hpp"

namespace topo {

// Outcome of minimizing the edge-Szeged index over all unicyclic graphs
// with given order and diameter. Every minimizer is kept, as its canonical
// graph6 string, in sorted order.
struct ExtremalResult {
  int n = 0;
  int d = 0;
  long long family_size = 0;
  long long min_value = 0;
  std::vector<std::string> minimizers;
  bool unique = false;
  bool construction_defined = false;  // extremal_unicyclic(n, d) exists
  bool matches_construction = false;  // unique minimizer equal to it
};

ExtremalResult min_edge_szeged(int n, int d, Execution exec = Execution::Parallel);

struct VerificationReport {
  std::string check;
  nlohmann::json params;
  bool pass = false;
  std::vector<std::string> counterexamples;  // graph6
  double duration_ms = 0.0;
};

// Sweep checking that for every order and diameter in range the edge-Szeged
// minimum over unicyclic graphs is attained by exactly one graph and that it
// is the expected construction. The expected builder is injectable so the
// check can be demonstrated to fail on a wrong construction.
struct ExtremalSweep {
  int n_min = 6;
  int n_max = 10;
  std::optional<int> d;  // fixed diameter; otherwise every d in 3..n-2
  Execution exec = Execution::Parallel;
  std::function<Graph(int, int)> expected;  // defaults to extremal_unicyclic
};

VerificationReport verify_extremal_minimizer(const ExtremalSweep& sweep);

// Named exhaustive checks over small graph families:
//   "2.1"      edge-Szeged decomposition formula vs the definitional value
//   "2.2"      edge partition counts after gluing a tree onto a base graph
//   "2.3"      consolidation never increases the edge-Szeged index
//   "2.4"      tree identities tying Szeged to Wiener indices
//   "2.5"      minimum Wiener tree of given diameter is the caterpillar
//   "2.6"      cycle distance profile closed form vs BFS
//   "sz-ge-we" edge-Szeged >= edge-Wiener, equality exactly on trees
// n_max bounds the graph order (cycle length for "2.6", base graph order
// for "2.2"); pass 0 for the per-check default.
VerificationReport verify_named_check(const std::string& name, int n_max = 0,
                                      Execution exec = Execution::Parallel);

int default_check_bound(const std::string& name);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const ExtremalResult& r);
nlohmann::json to_json(const IndexReport& r);
std::string format_table(const VerificationReport& r);

}  // namespace topo

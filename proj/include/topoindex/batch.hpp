#pragma once

#include <vector>

#include "topoindex/invariants.hpp"

namespace topo {

// Per-graph kernels over a batch. Serial is the plain reference loop;
// Parallel fans the loop out with OpenMP. Both fill the output slot of each
// input index, so results are identical and deterministic either way.
enum class Execution { Serial, Parallel };

std::vector<long long> wiener_batch(const std::vector<Graph>& gs, Execution exec);
std::vector<long long> edge_szeged_batch(const std::vector<Graph>& gs, Execution exec);
std::vector<long long> edge_szeged_formula_batch(const std::vector<Graph>& gs, Execution exec);
std::vector<int> diameter_batch(const std::vector<Graph>& gs, Execution exec);
std::vector<IndexReport> index_report_batch(const std::vector<Graph>& gs, Execution exec);

// Minimum and every index attaining it, by one serial scan.
struct MinResult {
  long long value = 0;
  std::vector<int> argmin;
};

MinResult min_over(const std::vector<long long>& values);

}  // namespace topo

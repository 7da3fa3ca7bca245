#include "topoindex/batch.hpp"

#include <stdexcept>

#include "topoindex/unicyclic.hpp"

namespace topo {

namespace {

template <class R, class F>
std::vector<R> map_graphs(const std::vector<Graph>& gs, Execution exec, F f) {
  std::vector<R> out(gs.size());
  if (exec == Execution::Serial) {
    for (size_t i = 0; i < gs.size(); ++i) out[i] = f(gs[i]);
  } else {
    const long long n = static_cast<long long>(gs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) out[i] = f(gs[i]);
  }
  return out;
}

}  // namespace

std::vector<long long> wiener_batch(const std::vector<Graph>& gs, Execution exec) {
  return map_graphs<long long>(gs, exec, [](const Graph& g) { return wiener(g); });
}

std::vector<long long> edge_szeged_batch(const std::vector<Graph>& gs, Execution exec) {
  return map_graphs<long long>(gs, exec, [](const Graph& g) { return edge_szeged(g); });
}

std::vector<long long> edge_szeged_formula_batch(const std::vector<Graph>& gs,
                                                 Execution exec) {
  return map_graphs<long long>(gs, exec,
                               [](const Graph& g) { return edge_szeged_formula(g); });
}

std::vector<int> diameter_batch(const std::vector<Graph>& gs, Execution exec) {
  return map_graphs<int>(gs, exec, [](const Graph& g) { return diameter(g); });
}

std::vector<IndexReport> index_report_batch(const std::vector<Graph>& gs, Execution exec) {
  return map_graphs<IndexReport>(gs, exec, [](const Graph& g) { return index_report(g); });
}

MinResult min_over(const std::vector<long long>& values) {
  if (values.empty()) throw std::invalid_argument("minimum of empty batch");
  MinResult r;
  r.value = values[0];
  for (long long v : values) r.value = std::min(r.value, v);
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i] == r.value) r.argmin.push_back(static_cast<int>(i));
  return r;
}

}  // namespace topo

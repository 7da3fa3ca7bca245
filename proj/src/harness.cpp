#include "topoindex/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "topoindex/canonical.hpp"
#include "topoindex/constructions.hpp"
#include "topoindex/enumeration.hpp"
#include "topoindex/graph6.hpp"
#include "topoindex/unicyclic.hpp"

namespace topo {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ExtremalResult minimize_over(const std::vector<Graph>& family, int n, int d,
                             Execution exec,
                             const std::function<Graph(int, int)>& expected) {
  ExtremalResult r;
  r.n = n;
  r.d = d;
  r.family_size = static_cast<long long>(family.size());
  if (family.empty()) throw std::invalid_argument("empty family for n=" + std::to_string(n) +
                                                  ", d=" + std::to_string(d));
  auto vals = edge_szeged_batch(family, exec);
  auto m = min_over(vals);
  r.min_value = m.value;
  for (int i : m.argmin) r.minimizers.push_back(canonical_form(family[i]));
  std::sort(r.minimizers.begin(), r.minimizers.end());
  r.unique = r.minimizers.size() == 1;
  try {
    Graph want = expected(n, d);
    r.construction_defined = true;
    r.matches_construction = r.unique && r.minimizers[0] == canonical_form(want);
  } catch (const std::invalid_argument&) {
    r.construction_defined = false;
    r.matches_construction = false;
  }
  return r;
}

// chunked parallel map over an index range with a serial fallback
template <class F>
void for_range(long long count, Execution exec, F body) {
  if (exec == Execution::Serial) {
    for (long long i = 0; i < count; ++i) body(i);
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < count; ++i) body(i);
  }
}

VerificationReport check_formula_route(int n_max, Execution exec) {
  VerificationReport r;
  r.check = "lemma-2.1";
  r.params = {{"n_max", n_max}};
  r.pass = true;
  for (int n = 3; n <= n_max; ++n) {
    auto family = unicyclic_graphs(n);
    auto direct = edge_szeged_batch(family, exec);
    auto formula = edge_szeged_formula_batch(family, exec);
    for (size_t i = 0; i < family.size(); ++i) {
      if (direct[i] != formula[i]) {
        r.pass = false;
        r.counterexamples.push_back(graph6_encode(family[i]));
      }
    }
  }
  return r;
}

Graph glue_tree(const Graph& g0, const RootedTree& t, int at) {
  std::vector<Edge> edges = g0.edges();
  std::vector<int> map(t.order());
  int fresh = g0.vertex_count();
  map[t.root()] = at;
  for (int v = 0; v < t.order(); ++v)
    if (v != t.root()) map[v] = fresh++;
  for (auto [u, v] : t.graph().edges()) edges.emplace_back(map[u], map[v]);
  return Graph(g0.vertex_count() + t.order() - 1, std::move(edges));
}

VerificationReport check_composition_counts(int n_max, Execution) {
  VerificationReport r;
  r.check = "lemma-2.2";
  r.params = {{"n_max", n_max}};
  r.pass = true;

  std::vector<RootedTree> glued;
  for (int k = 2; k <= 4; ++k)
    for (const auto& t : rooted_trees(k)) glued.push_back(t);

  for (int n0 = 2; n0 <= n_max; ++n0) {
    std::vector<Graph> bases;
    std::set<CanonicalForm> seen;
    for_each_connected_labeled_graph(n0, [&](const Graph& g) {
      if (seen.insert(canonical_form(g)).second) bases.push_back(g);
    });
    for (const Graph& g0 : bases) {
      for (int at = 0; at < g0.vertex_count(); ++at) {
        // product sums over the base edges, grouped by glued edge count:
        // same count must mean same sum, whatever the tree's shape
        std::map<int, std::set<long long>> sums_by_count;
        for (const auto& t : glued) {
          Graph big = glue_tree(g0, t, at);
          DistanceTable dt(big);
          long long sum = 0;
          for (Edge e : g0.edges()) {
            auto measured = edge_partition(big, dt, e);
            auto predicted = composition_m_count(g0, t.order() - 1, at, e);
            if (predicted != std::pair<long long, long long>(measured.m_u, measured.m_v)) {
              r.pass = false;
              r.counterexamples.push_back(graph6_encode(big));
            }
            sum += static_cast<long long>(measured.m_u) * measured.m_v;
          }
          sums_by_count[t.order() - 1].insert(sum);
        }
        for (auto& [cnt, sums] : sums_by_count) {
          if (sums.size() != 1) {
            r.pass = false;
            r.counterexamples.push_back(graph6_encode(g0));
          }
        }
      }
    }
  }
  return r;
}

VerificationReport check_consolidation(int n_max, Execution exec) {
  VerificationReport r;
  r.check = "lemma-2.3";
  r.params = {{"n_max", n_max}};
  r.pass = true;
  for (int n = 3; n <= n_max; ++n) {
    auto family = unicyclic_graphs(n);
    std::vector<char> bad(family.size(), 0);
    for_range(static_cast<long long>(family.size()), exec, [&](long long i) {
      const Graph& g = family[i];
      Graph h = consolidate_to_v1(g);
      long long before = edge_szeged(g);
      long long after = edge_szeged(h);
      bool same_graph = canonical_form(g) == canonical_form(h);
      if (after > before || ((after == before) != same_graph)) bad[i] = 1;
    });
    for (size_t i = 0; i < family.size(); ++i) {
      if (bad[i]) {
        r.pass = false;
        r.counterexamples.push_back(graph6_encode(family[i]));
      }
    }
  }
  return r;
}

VerificationReport check_tree_identities(int n_max, Execution exec) {
  VerificationReport r;
  r.check = "lemma-2.4";
  r.params = {{"n_max", n_max}};
  r.pass = true;
  for (int n = 1; n <= n_max; ++n) {
    auto family = free_trees(n);
    std::vector<char> bad(family.size(), 0);
    for_range(static_cast<long long>(family.size()), exec, [&](long long i) {
      const Graph& t = family[i];
      DistanceTable dt(t);
      const long long pend = static_cast<long long>(n - 1) * (n - 1);
      if (szeged(t, dt) != wiener(t, dt)) bad[i] = 1;
      if (edge_szeged(t, dt) != szeged(t, dt) - pend) bad[i] = 1;
      if (edge_wiener(t, dt) != edge_szeged(t, dt)) bad[i] = 1;
    });
    for (size_t i = 0; i < family.size(); ++i) {
      if (bad[i]) {
        r.pass = false;
        r.counterexamples.push_back(graph6_encode(family[i]));
      }
    }
  }
  return r;
}

VerificationReport check_min_wiener_tree(int n_max, Execution exec) {
  VerificationReport r;
  r.check = "lemma-2.5";
  r.params = {{"n_max", n_max}};
  r.pass = true;
  for (int n = 4; n <= n_max; ++n) {
    for (int d = 2; d <= n - 2; ++d) {
      auto family = free_trees(n, d);
      auto vals = wiener_batch(family, exec);
      auto m = min_over(vals);
      if (wiener(caterpillar_tree(n, d)) != m.value) {
        r.pass = false;
        for (int i : m.argmin) r.counterexamples.push_back(graph6_encode(family[i]));
      }
    }
  }
  return r;
}

VerificationReport check_cycle_profile(int g_max, Execution) {
  VerificationReport r;
  r.check = "lemma-2.6";
  r.params = {{"g_max", g_max}};
  r.pass = true;
  for (int g = 3; g <= g_max; ++g) {
    Graph c = cycle(g);
    auto d1 = bfs_distances(c, 0);      // v_1
    auto d2 = bfs_distances(c, 1);      // v_2
    auto dg = bfs_distances(c, g - 1);  // v_g
    for (int j = 2; j <= g - 1; ++j) {
      std::pair<int, int> measured{d2[j - 1] - d1[j - 1] + 1, dg[j - 1] - d1[j - 1] + 1};
      if (cycle_distance_profile(g, j) != measured) {
        r.pass = false;
        r.counterexamples.push_back(graph6_encode(c));
      }
    }
  }
  return r;
}

VerificationReport check_index_inequality(int n_max, Execution exec) {
  VerificationReport r;
  r.check = "lemma-sz-ge-we";
  r.params = {{"n_max", n_max}};
  r.pass = true;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::string> bad;
    auto probe = [&](const Graph& g) {
      DistanceTable dt(g);
      long long se = edge_szeged(g, dt);
      long long we = edge_wiener(g, dt);
      bool is_tree = classify(g) == GraphClass::Tree;
      if (se < we || ((se == we) != is_tree)) bad.push_back(graph6_encode(g));
    };
    if (exec == Execution::Serial || n <= 5) {
      for_each_connected_labeled_graph(n, probe);
    } else {
      // split the edge-mask space into chunks and sweep them in parallel
      const int bits = n * (n - 1) / 2;
      std::vector<Edge> slots;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
      const uint64_t total = 1ULL << bits;
      const uint64_t chunk = 1ULL << 12;
      const long long nchunks = static_cast<long long>((total + chunk - 1) / chunk);
      std::vector<std::vector<std::string>> found(nchunks);
#pragma omp parallel for schedule(dynamic)
      for (long long c = 0; c < nchunks; ++c) {
        const uint64_t hi = std::min(total, static_cast<uint64_t>(c + 1) * chunk);
        for (uint64_t mask = static_cast<uint64_t>(c) * chunk; mask < hi; ++mask) {
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
          Graph g(n, std::move(edges));
          DistanceTable dt(g);
          long long se = edge_szeged(g, dt);
          long long we = edge_wiener(g, dt);
          bool is_tree = classify(g) == GraphClass::Tree;
          if (se < we || ((se == we) != is_tree)) found[c].push_back(graph6_encode(g));
        }
      }
      for (auto& f : found) bad.insert(bad.end(), f.begin(), f.end());
    }
    if (!bad.empty()) {
      r.pass = false;
      r.counterexamples.insert(r.counterexamples.end(), bad.begin(), bad.end());
    }
  }
  return r;
}

}  // namespace

ExtremalResult min_edge_szeged(int n, int d, Execution exec) {
  auto family = unicyclic_graphs(n, d);
  return minimize_over(family, n, d, exec,
                       [](int nn, int dd) { return extremal_unicyclic(nn, dd); });
}

VerificationReport verify_extremal_minimizer(const ExtremalSweep& sweep) {
  auto start = Clock::now();
  VerificationReport r;
  r.check = "theorem1";
  r.params = {{"n_min", sweep.n_min}, {"n_max", sweep.n_max}};
  if (sweep.d) r.params["d"] = *sweep.d;
  r.pass = true;
  std::function<Graph(int, int)> expected = sweep.expected;
  if (!expected) expected = [](int n, int d) { return extremal_unicyclic(n, d); };
  for (int n = sweep.n_min; n <= sweep.n_max; ++n) {
    auto all = unicyclic_graphs(n);
    auto vals = edge_szeged_batch(all, sweep.exec);
    auto diams = diameter_batch(all, sweep.exec);
    int d_lo = sweep.d ? *sweep.d : 3;
    int d_hi = sweep.d ? *sweep.d : n - 2;
    for (int d = d_lo; d <= d_hi; ++d) {
      std::vector<Graph> family;
      std::vector<long long> fam_vals;
      for (size_t i = 0; i < all.size(); ++i) {
        if (diams[i] == d) {
          family.push_back(all[i]);
          fam_vals.push_back(vals[i]);
        }
      }
      if (fam_vals.empty()) {
        r.pass = false;
        continue;
      }
      auto m = min_over(fam_vals);
      std::vector<std::string> mins;
      for (int i : m.argmin) mins.push_back(canonical_form(family[i]));
      std::sort(mins.begin(), mins.end());
      bool ok = mins.size() == 1 && mins[0] == canonical_form(expected(n, d));
      if (!ok) {
        r.pass = false;
        for (int i : m.argmin) r.counterexamples.push_back(graph6_encode(family[i]));
      }
    }
  }
  r.duration_ms = ms_since(start);
  return r;
}

int default_check_bound(const std::string& name) {
  if (name == "2.1") return 10;
  if (name == "2.2") return 5;
  if (name == "2.3") return 9;
  if (name == "2.4") return 10;
  if (name == "2.5") return 10;
  if (name == "2.6") return 12;
  if (name == "sz-ge-we") return 7;
  throw std::invalid_argument("unknown check: " + name);
}

VerificationReport verify_named_check(const std::string& name, int n_max, Execution exec) {
  if (n_max <= 0) n_max = default_check_bound(name);
  auto start = Clock::now();
  VerificationReport r;
  if (name == "2.1") r = check_formula_route(n_max, exec);
  else if (name == "2.2") r = check_composition_counts(n_max, exec);
  else if (name == "2.3") r = check_consolidation(n_max, exec);
  else if (name == "2.4") r = check_tree_identities(n_max, exec);
  else if (name == "2.5") r = check_min_wiener_tree(n_max, exec);
  else if (name == "2.6") r = check_cycle_profile(n_max, exec);
  else if (name == "sz-ge-we") r = check_index_inequality(n_max, exec);
  else throw std::invalid_argument("unknown check: " + name);
  std::sort(r.counterexamples.begin(), r.counterexamples.end());
  r.counterexamples.erase(
      std::unique(r.counterexamples.begin(), r.counterexamples.end()),
      r.counterexamples.end());
  r.duration_ms = ms_since(start);
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  return {{"check", r.check},
          {"params", r.params},
          {"pass", r.pass},
          {"counterexamples", r.counterexamples},
          {"duration_ms", r.duration_ms}};
}

nlohmann::json to_json(const ExtremalResult& r) {
  return {{"n", r.n},
          {"d", r.d},
          {"family_size", r.family_size},
          {"min_edge_szeged", r.min_value},
          {"minimizers", r.minimizers},
          {"unique", r.unique},
          {"construction_defined", r.construction_defined},
          {"matches_construction", r.matches_construction}};
}

nlohmann::json to_json(const IndexReport& r) {
  nlohmann::json per_edge = nlohmann::json::array();
  for (size_t i = 0; i < r.vertex_partitions.size(); ++i) {
    const auto& vp = r.vertex_partitions[i];
    const auto& ep = r.edge_partitions[i];
    per_edge.push_back({{"edge", {vp.edge.first, vp.edge.second}},
                        {"n_u", vp.n_u},
                        {"n_v", vp.n_v},
                        {"n_0", vp.n_0},
                        {"m_u", ep.m_u},
                        {"m_v", ep.m_v},
                        {"m_0", ep.m_0}});
  }
  return {{"wiener", r.wiener},
          {"edge_wiener", r.edge_wiener},
          {"szeged", r.szeged},
          {"edge_szeged", r.edge_szeged},
          {"per_edge", per_edge}};
}

std::string format_table(const VerificationReport& r) {
  std::ostringstream out;
  out << r.check << "  params=" << r.params.dump()
      << "  result=" << (r.pass ? "PASS" : "FAIL")
      << "  counterexamples=" << r.counterexamples.size()
      << "  time=" << static_cast<long long>(r.duration_ms + 0.5) << "ms\n";
  for (const auto& c : r.counterexamples) out << "  counterexample " << c << "\n";
  return out.str();
}

}  // namespace topo

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "topoindex/canonical.hpp"
#include "topoindex/constructions.hpp"
#include "topoindex/enumeration.hpp"
#include "topoindex/graph6.hpp"
#include "topoindex/harness.hpp"
#include "topoindex/invariants.hpp"
#include "topoindex/unicyclic.hpp"

namespace {

using nlohmann::json;
using namespace topo;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
  std::string text = read_all(path);
  std::vector<Graph> out;
  if (format == "edgelist") {
    out.push_back(edgelist_decode(text));
    return out;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  if (out.empty()) throw std::runtime_error("no graphs in input");
  return out;
}

void emit_graph(const Graph& g, const std::string& format) {
  if (format == "edgelist") std::cout << edgelist_encode(g);
  else std::cout << graph6_encode(g) << "\n";
}

int cmd_compute(const std::string& in, const std::string& format,
                const std::vector<std::string>& indices, bool per_edge) {
  for (const auto& name : indices) {
    if (name != "wiener" && name != "edge-wiener" && name != "szeged" && name != "edge-szeged")
      throw CLI::ValidationError("--indices", "unknown index: " + name);
  }
  for (const Graph& g : read_graphs(in, format)) {
    IndexReport rep = index_report(g);
    json full = to_json(rep);
    json out;
    out["graph6"] = graph6_encode(g);
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    for (const auto& name : indices) {
      if (name == "wiener") out["wiener"] = full["wiener"];
      if (name == "edge-wiener") out["edge_wiener"] = full["edge_wiener"];
      if (name == "szeged") out["szeged"] = full["szeged"];
      if (name == "edge-szeged") out["edge_szeged"] = full["edge_szeged"];
    }
    if (per_edge) out["per_edge"] = full["per_edge"];
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int cmd_decompose(const std::string& in, const std::string& format) {
  for (const Graph& g : read_graphs(in, format)) {
    auto dec = decompose(g);
    json out;
    out["girth"] = dec.cycle.size();
    out["cycle"] = dec.cycle;
    std::vector<int> orders;
    for (const auto& t : dec.trees) orders.push_back(t.order());
    out["tree_orders"] = orders;
    std::cout << out.dump() << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"distance-based topological indices of small graphs"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "indices of graphs read from a file or stdin");
  std::string c_in = "-", c_format = "g6";
  std::vector<std::string> c_indices{"wiener", "edge-wiener", "szeged", "edge-szeged"};
  bool c_per_edge = false;
  compute->add_option("--in", c_in, "input path, - for stdin");
  compute->add_option("--format", c_format)->check(CLI::IsMember({"g6", "edgelist"}));
  compute->add_option("--indices", c_indices, "subset of wiener,edge-wiener,szeged,edge-szeged")
      ->delimiter(',');
  compute->add_flag("--per-edge", c_per_edge, "include per-edge partition counts");

  auto* construct = app.add_subcommand("construct", "build a named graph");
  std::string kind;
  construct->add_option("kind", kind, "extremal | caterpillar | broom | cycle")
      ->required()
      ->check(CLI::IsMember({"extremal", "caterpillar", "broom", "cycle"}));
  int b_n = 0, b_d = 0, b_l1 = 0, b_l2 = 0, b_a = 0;
  std::string b_out = "g6";
  construct->add_option("--n", b_n, "order");
  construct->add_option("--d", b_d, "diameter");
  construct->add_option("--l1", b_l1, "first path edge count");
  construct->add_option("--l2", b_l2, "second path edge count");
  construct->add_option("--a", b_a, "extra leaf count");
  construct->add_option("--out", b_out)->check(CLI::IsMember({"g6", "edgelist"}));

  auto* enumerate = app.add_subcommand("enumerate", "list non-isomorphic graphs as graph6");
  std::string family;
  enumerate->add_option("family", family, "trees | unicyclic")
      ->required()
      ->check(CLI::IsMember({"trees", "unicyclic"}));
  int e_n = 0;
  int e_d = -1, e_girth = -1;
  enumerate->add_option("--n", e_n, "order")->required();
  enumerate->add_option("--d", e_d, "keep only this diameter");
  enumerate->add_option("--girth", e_girth, "keep only this girth (unicyclic)");

  auto* decompose_cmd = app.add_subcommand("decompose", "cycle and pendant tree orders");
  std::string d_in = "-", d_format = "g6";
  decompose_cmd->add_option("--in", d_in, "input path, - for stdin");
  decompose_cmd->add_option("--format", d_format)->check(CLI::IsMember({"g6", "edgelist"}));

  auto* verify = app.add_subcommand("verify", "run an exhaustive check");
  std::string what;
  verify->add_option("what", what, "theorem1 | lemma")
      ->required()
      ->check(CLI::IsMember({"theorem1", "lemma"}));
  std::string v_name;
  int v_nmax = 0, v_nmin = 0, v_d = -1;
  std::string v_json;
  bool v_serial = false;
  verify->add_option("--name", v_name, "2.1 .. 2.6 or sz-ge-we (lemma only)");
  verify->add_option("--n-max", v_nmax, "largest order (check-specific default)");
  verify->add_option("--n-min", v_nmin, "smallest order (theorem1 only, default 6)");
  verify->add_option("--d", v_d, "restrict theorem1 to one diameter");
  verify->add_option("--json", v_json, "also write the report as JSON to this path");
  verify->add_flag("--serial", v_serial, "single-threaded sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*compute) return cmd_compute(c_in, c_format, c_indices, c_per_edge);

  if (*construct) {
    if (kind == "extremal") {
      emit_graph(extremal_unicyclic(b_n, b_d), b_out);
    } else if (kind == "caterpillar") {
      emit_graph(caterpillar_tree(b_n, b_d), b_out);
    } else if (kind == "broom") {
      emit_graph(broom(b_l1, b_l2, b_a).graph(), b_out);
    } else {
      emit_graph(cycle(b_n), b_out);
    }
    return 0;
  }

  if (*enumerate) {
    std::optional<int> d = e_d >= 0 ? std::optional<int>(e_d) : std::nullopt;
    std::optional<int> girth = e_girth >= 0 ? std::optional<int>(e_girth) : std::nullopt;
    auto print = [](const Graph& g) { std::cout << graph6_encode(g) << "\n"; };
    if (family == "trees") {
      if (girth) throw CLI::ValidationError("--girth", "trees have no girth filter");
      for_each_free_tree(e_n, d, print);
    } else {
      for_each_unicyclic(e_n, d, girth, print);
    }
    return 0;
  }

  if (*decompose_cmd) return cmd_decompose(d_in, d_format);

  // verify
  Execution exec = v_serial ? Execution::Serial : Execution::Parallel;
  VerificationReport report;
  if (what == "theorem1") {
    ExtremalSweep sweep;
    if (v_nmin > 0) sweep.n_min = v_nmin;
    if (v_nmax > 0) sweep.n_max = v_nmax;
    if (v_d >= 0) sweep.d = v_d;
    sweep.exec = exec;
    report = verify_extremal_minimizer(sweep);
  } else {
    if (v_name.empty())
      throw CLI::RequiredError("--name is required for verify lemma");
    report = verify_named_check(v_name, v_nmax, exec);
  }
  std::cout << format_table(report);
  if (!v_json.empty()) {
    std::ofstream out(v_json);
    if (!out) throw std::runtime_error("cannot open " + v_json);
    out << to_json(report).dump(2) << "\n";
  }
  return report.pass ? 0 : 1;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

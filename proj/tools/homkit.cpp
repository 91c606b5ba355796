// homkit: build graph coloring complexes Hom(G,K_n), compute the covering
// invariant chi_dot, replay collapses and nerve decompositions, and certify
// homological connectivity bounds.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homkit/chain.hpp"
#include "homkit/collapse.hpp"
#include "homkit/covering.hpp"
#include "homkit/graph.hpp"
#include "homkit/hom_complex.hpp"
#include "homkit/json_io.hpp"
#include "homkit/nerve.hpp"

namespace {

using namespace homkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitFinding = 3;

struct CommonOpts {
  std::string input = "-";
  std::string format = "auto";
  bool json = false;
  std::size_t cell_cap = kDefaultCellCap;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("input", o.input, "graph file, or - for stdin");
  cmd->add_option("-f,--format", o.format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}))
      ->capture_default_str();
  cmd->add_flag("--json", o.json, "emit JSON instead of text");
  cmd->add_option("--cell-cap", o.cell_cap, "maximum number of cells to build");
}

Graph load_graph(const CommonOpts& o) {
  std::string text;
  if (o.input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(o.input);
    if (!in) throw parse_error("cannot open " + o.input);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  GraphFormat fmt = GraphFormat::Auto;
  if (o.format == "edgelist") fmt = GraphFormat::EdgeList;
  if (o.format == "graph6") fmt = GraphFormat::Graph6;
  return parse_graph(text, fmt);
}

VertexMask parse_vertex_set(const Graph& g, const std::string& csv) {
  VertexMask mask = 0;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = tok.find_last_not_of(" \t");
    tok = tok.substr(a, b - a + 1);
    int v = g.vertex_by_label(tok);
    if (v < 0) {
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0 || v >= g.n) v = -1;
      } catch (...) {
        v = -1;
      }
    }
    if (v < 0) throw parse_error("unknown vertex label: " + tok);
    mask |= VertexMask{1} << v;
  }
  return mask;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string group_text(long long betti, const std::vector<std::uint64_t>& torsion) {
  if (betti == 0 && torsion.empty()) return "0";
  std::string s;
  if (betti == 1)
    s = "Z";
  else if (betti > 1)
    s = "Z^" + std::to_string(betti);
  for (std::uint64_t d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

std::string witness_text(const Graph& g, const Covering& cov) {
  std::string s;
  for (VertexMask set : cov) {
    s += "[";
    bool first = true;
    for (int v : mask_vertices(set)) {
      if (!first) s += " ";
      s += g.labels[v];
      first = false;
    }
    s += "]";
  }
  return s;
}

std::string set_text(const Graph& g, VertexMask m) {
  std::string s = "{";
  bool first = true;
  for (int v : mask_vertices(m)) {
    if (!first) s += " ";
    s += g.labels[v];
    first = false;
  }
  return s + "}";
}

int cmd_chi_dot(const CommonOpts& o) {
  Graph g = load_graph(o);
  ChiDotResult r = chi_dot(g);
  if (o.json) {
    Json doc;
    doc["command"] = "chi-dot";
    doc["graph"] = graph_json(g);
    doc["chi_dot"] = r.value;
    doc["witness"] = covering_json(g, r.witness);
    emit(doc);
  } else {
    std::cout << "chi_dot = " << r.value << "; witness: " << witness_text(g, r.witness)
              << "\n";
  }
  return kExitOk;
}

int cmd_hom(const CommonOpts& o, int n) {
  Graph g = load_graph(o);
  CellComplex cx = build_hom(g, n, o.cell_cap);
  auto counts = cx.cell_counts_by_dim();
  if (o.json) {
    Json doc;
    doc["command"] = "hom";
    doc["graph"] = graph_json(g);
    doc["n"] = n;
    doc["cells_total"] = cx.cells.size();
    doc["dim"] = cx.dim();
    doc["cells_by_dim"] = counts;
    emit(doc);
  } else {
    std::cout << "Hom complex with " << n << " colors: " << cx.cells.size()
              << " cells, dimension " << cx.dim() << "\n";
    for (std::size_t k = 0; k < counts.size(); ++k)
      std::cout << "  dim " << k << ": " << counts[k] << "\n";
  }
  return kExitOk;
}

int cmd_homology(const CommonOpts& o, int n, bool oracle) {
  Graph g = load_graph(o);
  CellComplex cx = build_hom(g, n, o.cell_cap);
  HomologyReport r = reduced_homology(chain_complex(cx));
  ConnectivityVerdict verdict = homological_connectivity(r, !cx.empty());
  bool agrees = true;
  if (oracle) agrees = (order_complex_oracle(cx) == r);

  if (o.json) {
    Json doc;
    doc["command"] = "homology";
    doc["graph"] = graph_json(g);
    doc["n"] = n;
    doc["cells_total"] = cx.cells.size();
    doc["reduced"] = true;
    doc["homology"] = homology_json(r);
    doc["connectivity"] = verdict_json(verdict);
    doc["euler_characteristic"] = euler_characteristic_cells(cx);
    if (oracle) {
      Json oc;
      oc["checked"] = true;
      oc["agrees"] = agrees;
      doc["oracle"] = std::move(oc);
    }
    emit(doc);
  } else {
    if (cx.empty()) {
      std::cout << "empty complex\n";
    } else {
      std::string line;
      for (int k = 0; k <= std::max(r.max_dim(), 0); ++k) {
        if (!line.empty()) line += ", ";
        std::string grp = (k == 0) ? group_text(r.betti_at(0) + 1, r.torsion_at(0))
                                   : group_text(r.betti_at(k), r.torsion_at(k));
        line += "dim " + std::to_string(k) + ": " + grp;
        if (k == 0) line += " (reduced: " + group_text(r.betti_at(0), r.torsion_at(0)) + ")";
      }
      std::cout << line << "\n";
    }
    std::cout << "connectivity: " << connectivity_level_text(verdict.level)
              << " (homological)\n";
    if (oracle)
      std::cout << "order-complex oracle: " << (agrees ? "agrees" : "DISAGREES") << "\n";
  }
  if (oracle && !agrees) {
    std::cerr << "homology: dual-route disagreement\n";
    return kExitFinding;
  }
  return kExitOk;
}

int cmd_collapse(const CommonOpts& o, int n, const std::string& set_csv,
                 const std::string& keep_csv) {
  Graph g = load_graph(o);
  VertexMask i = parse_vertex_set(g, set_csv);
  VertexMask keep = parse_vertex_set(g, keep_csv);
  CollapseTrace t = run_collapse(g, n, i, keep, o.cell_cap);
  if (o.json) {
    Json doc;
    doc["command"] = "collapse";
    doc["graph"] = graph_json(g);
    doc["n"] = n;
    doc["set"] = mask_json(g, i);
    doc["keep"] = mask_json(g, keep);
    doc["start_cells"] = t.start.cells.size();
    doc["end_cells"] = t.end.cells.size();
    doc["steps"] = trace_steps_json(g, t);
    doc["verified"] = true;
    emit(doc);
  } else {
    std::cout << "collapse of " << set_text(g, i) << " onto " << set_text(g, keep) << ": "
              << t.start.cells.size() << " -> " << t.end.cells.size() << " cells in "
              << t.steps.size() << " verified steps\n";
  }
  return kExitOk;
}

int cmd_nerve(const CommonOpts& o, int n, std::optional<int> m_opt) {
  Graph g = load_graph(o);
  NerveDecomposition d = nerve_cover(g, n, o.cell_cap);
  int m = m_opt.value_or(n - chi_dot(g).value - 1);
  NerveCheck check = check_nerve_hypotheses(d, m);
  if (o.json) {
    Json doc;
    doc["command"] = "nerve";
    doc["graph"] = graph_json(g);
    doc["n"] = n;
    doc["m"] = m;
    Json fam = Json::array();
    for (const PieceVerdict& p : check.pieces) {
      Json row;
      row["set"] = mask_json(g, p.set);
      row["cells"] = p.cells;
      row["verdict"] = verdict_json(p.verdict);
      fam.push_back(std::move(row));
    }
    Json inters = Json::array();
    for (const PieceVerdict& p : check.intersections) {
      Json row;
      row["set"] = mask_json(g, p.set);
      row["cells"] = p.cells;
      row["verdict"] = verdict_json(p.verdict);
      inters.push_back(std::move(row));
    }
    doc["family"] = std::move(fam);
    doc["intersections"] = std::move(inters);
    doc["hypotheses_satisfied"] = check.satisfied;
    emit(doc);
  } else {
    std::cout << "family:\n";
    for (const PieceVerdict& p : check.pieces)
      std::cout << "  " << set_text(g, p.set) << ": " << p.cells << " cells, level "
                << connectivity_level_text(p.verdict.level) << "\n";
    std::cout << "intersections:\n";
    for (const PieceVerdict& p : check.intersections)
      std::cout << "  " << set_text(g, p.set) << ": " << p.cells << " cells, level "
                << connectivity_level_text(p.verdict.level) << "\n";
    std::cout << "hypotheses at m = " << m << ": "
              << (check.satisfied ? "satisfied" : "NOT satisfied") << "\n";
  }
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, int n, bool inductive, std::optional<int> m_opt) {
  Graph g = load_graph(o);
  TheoremReport r = verify_theorem(g, n, inductive ? VerifyMode::Inductive : VerifyMode::Direct,
                                   o.cell_cap, m_opt);
  if (o.json) {
    Json doc;
    doc["command"] = "verify";
    Json body = theorem_report_json(r);
    for (auto& [key, value] : body.items()) doc[key] = value;
    emit(doc);
  } else {
    std::cout << "chi_dot = " << r.chi_dot_value << ", max_degree = " << r.max_degree_value
              << "\n";
    std::cout << "claimed_level = " << r.claimed_level
              << ", corollary_level = " << r.corollary_level << "\n";
    std::cout << "verdict = " << connectivity_level_text(r.verdict.level)
              << " (homological)\n";
    if (r.mode == VerifyMode::Inductive) {
      for (const PieceComparison& p : r.pieces)
        std::cout << "piece " << set_text(r.g, p.set) << ": " << p.cells << " cells, level "
                  << connectivity_level_text(p.verdict.level) << ", reduction "
                  << (p.matches_reduction ? "matches" : "MISMATCH") << "\n";
      for (const PieceComparison& p : r.intersections)
        std::cout << "intersection " << set_text(r.g, p.set) << ": " << p.cells
                  << " cells, level " << connectivity_level_text(p.verdict.level)
                  << ", reduction " << (p.matches_reduction ? "matches" : "MISMATCH")
                  << "\n";
      std::cout << "nerve hypotheses at m = " << r.nerve_m << ": "
                << (r.nerve_hypotheses_satisfied ? "satisfied" : "NOT satisfied") << "\n";
    }
    std::cout << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  if (!r.pass()) {
    std::cerr << "verify: verdict below claim or inductive piece mismatch\n";
    return kExitFinding;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph coloring complexes: covering invariant, Hom complexes, "
               "collapses, nerve decompositions, homological connectivity"};
  app.require_subcommand(1);

  std::size_t env_cap = kDefaultCellCap;
  if (const char* env = std::getenv("HOMKIT_CELL_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) env_cap = static_cast<std::size_t>(v);
  }

  CommonOpts chi_o, hom_o, homology_o, collapse_o, nerve_o, verify_o;
  chi_o.cell_cap = hom_o.cell_cap = homology_o.cell_cap = collapse_o.cell_cap =
      nerve_o.cell_cap = verify_o.cell_cap = env_cap;

  auto* chi_cmd = app.add_subcommand("chi-dot", "covering invariant with witness");
  add_common(chi_cmd, chi_o);

  int hom_n = 0, homology_n = 0, collapse_n = 0, nerve_n = 0, verify_n = 0;
  auto* hom_cmd = app.add_subcommand("hom", "cell census of the Hom complex");
  add_common(hom_cmd, hom_o);
  hom_cmd->add_option("-n,--colors", hom_n, "number of colors")->required();

  bool oracle = false;
  auto* homology_cmd = app.add_subcommand("homology", "reduced integral homology");
  add_common(homology_cmd, homology_o);
  homology_cmd->add_option("-n,--colors", homology_n, "number of colors")->required();
  homology_cmd->add_flag("--oracle", oracle, "cross-check with the order-complex route");

  std::string set_csv, keep_csv;
  auto* collapse_cmd = app.add_subcommand("collapse", "verified collapse of the color-n piece");
  add_common(collapse_cmd, collapse_o);
  collapse_cmd->add_option("-n,--colors", collapse_n, "number of colors")->required();
  collapse_cmd->add_option("--set", set_csv, "independent set (comma-separated labels)")
      ->required();
  collapse_cmd->add_option("--keep", keep_csv, "subset left untouched");

  int nerve_m = 0, verify_m = 0;
  auto* nerve_cmd = app.add_subcommand("nerve", "cover by maximal independent sets");
  add_common(nerve_cmd, nerve_o);
  nerve_cmd->add_option("-n,--colors", nerve_n, "number of colors")->required();
  auto* nerve_m_opt = nerve_cmd->add_option("-m", nerve_m, "connectivity level to check");

  bool inductive = false;
  auto* verify_cmd = app.add_subcommand("verify", "certify the connectivity bound");
  add_common(verify_cmd, verify_o);
  verify_cmd->add_option("-n,--colors", verify_n, "number of colors")->required();
  verify_cmd->add_flag("--inductive", inductive, "also verify cover pieces and nerve hypotheses");
  auto* verify_m_opt = verify_cmd->add_option("-m", verify_m, "override nerve check level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the usage diagnostic
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (chi_cmd->parsed()) return cmd_chi_dot(chi_o);
    if (hom_cmd->parsed()) return cmd_hom(hom_o, hom_n);
    if (homology_cmd->parsed()) return cmd_homology(homology_o, homology_n, oracle);
    if (collapse_cmd->parsed()) return cmd_collapse(collapse_o, collapse_n, set_csv, keep_csv);
    if (nerve_cmd->parsed())
      return cmd_nerve(nerve_o, nerve_n,
                       nerve_m_opt->count() ? std::optional<int>(nerve_m) : std::nullopt);
    if (verify_cmd->parsed())
      return cmd_verify(verify_o, verify_n, inductive,
                        verify_m_opt->count() ? std::optional<int>(verify_m) : std::nullopt);
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const verification_error& e) {
    std::cerr << "finding: " << e.what() << "\n";
    return kExitFinding;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#include "homkit/json_io.hpp"

namespace homkit {

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  Json out;
  out["vertices"] = g.n;
  out["edges"] = std::move(edges);
  return out;
}

Json mask_json(const Graph& g, VertexMask m) {
  Json out = Json::array();
  for (int v : mask_vertices(m)) out.push_back(g.labels[v]);
  return out;
}

Json covering_json(const Graph& g, const Covering& c) {
  Json out = Json::array();
  for (VertexMask s : c) out.push_back(mask_json(g, s));
  return out;
}

Json assignment_json(const Graph& g, const MultiHom& c) {
  Json out;
  for (std::size_t v = 0; v < c.colors.size(); ++v)
    out[g.labels[v]] = colorset_colors(c.colors[v]);
  return out;
}

std::string connectivity_level_text(int level) {
  return level == kLevelInfinite ? "inf" : std::to_string(level);
}

Json verdict_json(const ConnectivityVerdict& v) {
  Json out;
  if (v.infinite())
    out["level"] = "inf";
  else
    out["level"] = v.level;
  out["certified"] = ConnectivityVerdict::certified;
  return out;
}

Json homology_json(const HomologyReport& r) {
  Json out = Json::array();
  for (int k = 0; k <= r.max_dim(); ++k) {
    Json row;
    row["dim"] = k;
    row["betti"] = r.betti_at(k);
    row["torsion"] = r.torsion_at(k);
    out.push_back(std::move(row));
  }
  return out;
}

Json trace_steps_json(const Graph& g, const CollapseTrace& t) {
  Json out = Json::array();
  for (const CollapseStep& s : t.steps) {
    Json step;
    step["removed_pair"] =
        Json::array({assignment_json(g, s.free_cell), assignment_json(g, s.cofree_cell)});
    step["vertex"] = g.labels[s.vertex];
    out.push_back(std::move(step));
  }
  return out;
}

namespace {

Json piece_json(const Graph& g, const PieceComparison& p) {
  Json out;
  out["set"] = mask_json(g, p.set);
  out["cells"] = p.cells;
  out["verdict"] = verdict_json(p.verdict);
  out["matches_reduction"] = p.matches_reduction;
  return out;
}

}  // namespace

Json theorem_report_json(const TheoremReport& r) {
  Json out;
  out["graph"] = graph_json(r.g);
  out["n"] = r.n;
  out["mode"] = (r.mode == VerifyMode::Direct) ? "direct" : "inductive";
  out["chi_dot"] = r.chi_dot_value;
  out["max_degree"] = r.max_degree_value;
  out["claimed_level"] = r.claimed_level;
  out["corollary_level"] = r.corollary_level;
  out["cells_total"] = r.cells_total;
  out["verdict"] = verdict_json(r.verdict);
  Json pieces = Json::array();
  for (const PieceComparison& p : r.pieces) pieces.push_back(piece_json(r.g, p));
  Json inters = Json::array();
  for (const PieceComparison& p : r.intersections) inters.push_back(piece_json(r.g, p));
  out["pieces"] = std::move(pieces);
  out["intersections"] = std::move(inters);
  if (r.mode == VerifyMode::Inductive) {
    out["nerve_m"] = r.nerve_m;
    out["nerve_hypotheses_satisfied"] = r.nerve_hypotheses_satisfied;
  } else {
    out["nerve_m"] = nullptr;
    out["nerve_hypotheses_satisfied"] = nullptr;
  }
  out["pass"] = r.pass();
  return out;
}

}  // namespace homkit

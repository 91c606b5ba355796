#include "homkit/nerve.hpp"

#include <algorithm>
#include <set>

#include "homkit/covering.hpp"

namespace homkit {

NerveDecomposition nerve_cover(const Graph& g, int n, std::size_t cell_cap) {
  NerveDecomposition d;
  d.g = g;
  d.n = n;

  std::vector<VertexMask> family_sets = maximal_independent_sets(g);
  for (VertexMask i : family_sets)
    d.family.push_back(NervePiece{i, build_delta_i(g, n, i, cell_cap)});

  // union coverage: every cell of the full complex lies in some piece
  CellComplex whole = build_hom(g, n, cell_cap);
  std::vector<MultiHom> covered;
  for (const NervePiece& p : d.family) {
    std::vector<MultiHom> merged;
    std::set_union(covered.begin(), covered.end(), p.complex.cells.begin(),
                   p.complex.cells.end(), std::back_inserter(merged), cell_order_less);
    covered = std::move(merged);
  }
  if (covered != whole.cells)
    throw verification_error("nerve_cover: family does not cover the complex");

  // distinct intersections of >= 2 members: meet-semilattice closure of the
  // index sets; the intersection complex depends only on the intersected set
  std::set<VertexMask> values;
  for (std::size_t a = 0; a < family_sets.size(); ++a)
    for (std::size_t b = a + 1; b < family_sets.size(); ++b)
      values.insert(family_sets[a] & family_sets[b]);
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexMask v : std::vector<VertexMask>(values.begin(), values.end()))
      for (VertexMask i : family_sets)
        if (values.insert(v & i).second) grew = true;
  }

  std::vector<VertexMask> keys(values.begin(), values.end());
  std::sort(keys.begin(), keys.end(), mask_lex_less);
  for (VertexMask key : keys)
    d.intersections.push_back(NervePiece{key, build_delta_i(g, n, key, cell_cap)});
  return d;
}

namespace {

ConnectivityVerdict piece_connectivity(const CellComplex& c) {
  HomologyReport r = reduced_homology(chain_complex(c));
  return homological_connectivity(r, !c.empty());
}

}  // namespace

NerveCheck check_nerve_hypotheses(const NerveDecomposition& d, int m) {
  NerveCheck check;
  check.m = m;
  check.satisfied = true;
  for (const NervePiece& p : d.family) {
    PieceVerdict v{p.set, p.complex.cells.size(), piece_connectivity(p.complex)};
    if (v.verdict.level < m) check.satisfied = false;
    check.pieces.push_back(v);
  }
  for (const NervePiece& p : d.intersections) {
    PieceVerdict v{p.set, p.complex.cells.size(), piece_connectivity(p.complex)};
    if (v.verdict.level < m - 1) check.satisfied = false;
    check.intersections.push_back(v);
  }
  return check;
}

bool TheoremReport::pass() const {
  if (!connectivity_pass()) return false;
  if (mode == VerifyMode::Direct) return true;
  if (!nerve_hypotheses_satisfied) return false;
  for (const PieceComparison& p : pieces)
    if (!p.matches_reduction) return false;
  for (const PieceComparison& p : intersections)
    if (!p.matches_reduction) return false;
  return true;
}

TheoremReport verify_theorem(const Graph& g, int n, VerifyMode mode,
                             std::size_t cell_cap, std::optional<int> m_override) {
  TheoremReport report;
  report.g = g;
  report.n = n;
  report.mode = mode;
  report.chi_dot_value = chi_dot(g).value;
  report.max_degree_value = max_degree(g);
  report.claimed_level = n - report.chi_dot_value - 1;
  report.corollary_level = n - report.max_degree_value - 2;

  CellComplex whole = build_hom(g, n, cell_cap);
  report.cells_total = whole.cells.size();
  report.verdict =
      homological_connectivity(reduced_homology(chain_complex(whole)), !whole.empty());

  if (mode == VerifyMode::Direct) return report;

  NerveDecomposition cover = nerve_cover(g, n, cell_cap);
  auto compare_piece = [&](const NervePiece& p) {
    PieceComparison cmp;
    cmp.set = p.set;
    cmp.cells = p.complex.cells.size();
    HomologyReport piece_h = reduced_homology(chain_complex(p.complex));
    cmp.verdict = homological_connectivity(piece_h, !p.complex.empty());
    CellComplex reduced =
        build_hom(induced_subgraph(g, g.all_vertices() & ~p.set), n - 1, cell_cap);
    HomologyReport reduced_h = reduced_homology(chain_complex(reduced));
    cmp.matches_reduction = (piece_h == reduced_h);
    return cmp;
  };
  for (const NervePiece& p : cover.family) report.pieces.push_back(compare_piece(p));
  for (const NervePiece& p : cover.intersections)
    report.intersections.push_back(compare_piece(p));

  report.nerve_m = m_override.value_or(report.claimed_level);
  report.nerve_hypotheses_satisfied =
      check_nerve_hypotheses(cover, report.nerve_m).satisfied;
  return report;
}

}  // namespace homkit

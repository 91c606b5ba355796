#include "homkit/hom_complex.hpp"

#include <algorithm>
#include <bit>

namespace homkit {

std::vector<int> colorset_colors(ColorMask m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= static_cast<ColorMask>(m - 1);
  }
  return out;
}

bool colorset_lex_less(ColorMask a, ColorMask b) {
  while (a != 0 && b != 0) {
    int ca = std::countr_zero(a);
    int cb = std::countr_zero(b);
    if (ca != cb) return ca < cb;
    a &= static_cast<ColorMask>(a - 1);
    b &= static_cast<ColorMask>(b - 1);
  }
  return a == 0 && b != 0;
}

int cell_dim(const MultiHom& c) {
  int d = 0;
  for (ColorMask m : c.colors) d += colorset_size(m) - 1;
  return d;
}

int cell_total_size(const MultiHom& c) {
  int s = 0;
  for (ColorMask m : c.colors) s += colorset_size(m);
  return s;
}

bool cell_subset(const MultiHom& a, const MultiHom& b) {
  for (std::size_t v = 0; v < a.colors.size(); ++v)
    if ((a.colors[v] & ~b.colors[v]) != 0) return false;
  return true;
}

bool cell_lex_less(const MultiHom& a, const MultiHom& b) {
  for (std::size_t v = 0; v < a.colors.size(); ++v) {
    if (a.colors[v] == b.colors[v]) continue;
    return colorset_lex_less(a.colors[v], b.colors[v]);
  }
  return false;
}

bool cell_order_less(const MultiHom& a, const MultiHom& b) {
  int da = cell_dim(a);
  int db = cell_dim(b);
  if (da != db) return da < db;
  return cell_lex_less(a, b);
}

std::vector<std::pair<MultiHom, int>> codim1_faces(const MultiHom& c) {
  if (cell_dim(c) < 1)
    throw parse_error("codim1_faces: 0-cells have no codimension-1 faces");
  std::vector<std::pair<MultiHom, int>> out;
  int offset = 0;
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    ColorMask set = c.colors[v];
    int k = colorset_size(set);
    if (k >= 2) {
      int pos = 0;
      for (ColorMask m = set; m != 0; m &= static_cast<ColorMask>(m - 1), ++pos) {
        ColorMask bit = static_cast<ColorMask>(m & (~m + 1));
        MultiHom face = c;
        face.colors[v] = static_cast<ColorMask>(set & ~bit);
        int sign = ((offset + pos) % 2 == 0) ? 1 : -1;
        out.emplace_back(std::move(face), sign);
      }
    }
    offset += k - 1;
  }
  return out;
}

bool CellComplex::contains(const MultiHom& c) const {
  return std::binary_search(cells.begin(), cells.end(), c, cell_order_less);
}

int CellComplex::dim() const {
  return cells.empty() ? -1 : cell_dim(cells.back());
}

std::vector<std::size_t> CellComplex::cell_counts_by_dim() const {
  std::vector<std::size_t> counts(dim() + 1, 0);
  for (const MultiHom& c : cells) ++counts[cell_dim(c)];
  return counts;
}

namespace {

// Enumerates every valid assignment vertex by vertex. color_n_allowed_at
// restricts where the reserved top color may appear (all vertices for the
// plain Hom complex).
struct CellEnumerator {
  const Graph& g;
  int n;
  VertexMask color_n_allowed_at;
  std::size_t cap;
  std::vector<MultiHom> cells;
  MultiHom scratch;

  void dfs(int v) {
    if (v == g.n) {
      if (cells.size() >= cap)
        throw cap_exceeded("cell cap of " + std::to_string(cap) + " cells exceeded");
      cells.push_back(scratch);
      return;
    }
    ColorMask base = static_cast<ColorMask>((n >= kMaxColors) ? ~ColorMask{0}
                                                              : ((ColorMask{1} << n) - 1));
    if (n >= 1 && ((color_n_allowed_at >> v) & 1u) == 0)
      base &= static_cast<ColorMask>(~(ColorMask{1} << (n - 1)));
    for (VertexMask m = g.adj[v] & ((VertexMask{1} << v) - 1); m != 0; m &= m - 1)
      base &= static_cast<ColorMask>(~scratch.colors[std::countr_zero(m)]);
    // nonempty subsets of base, descending mask order; final sort fixes order
    for (ColorMask sub = base; sub != 0; sub = static_cast<ColorMask>((sub - 1) & base)) {
      scratch.colors[v] = sub;
      dfs(v + 1);
    }
    scratch.colors[v] = 0;
  }
};

CellComplex build_with_restriction(const Graph& g, int n, VertexMask color_n_allowed_at,
                                   std::size_t cell_cap) {
  if (n < 0 || n > kMaxColors)
    throw parse_error("color count out of supported range: " + std::to_string(n));
  if (cell_cap < 1) throw parse_error("cell cap must be positive");
  CellComplex cx;
  cx.carrier = g;
  cx.n_colors = n;
  CellEnumerator e{g, n, color_n_allowed_at, cell_cap, {}, MultiHom{}};
  e.scratch.colors.assign(g.n, 0);
  if (g.n == 0) {
    // single empty-assignment cell, a point
    cx.cells.push_back(MultiHom{});
    return cx;
  }
  e.dfs(0);
  std::sort(e.cells.begin(), e.cells.end(), cell_order_less);
  cx.cells = std::move(e.cells);
  return cx;
}

}  // namespace

CellComplex build_hom(const Graph& g, int n, std::size_t cell_cap) {
  return build_with_restriction(g, n, g.all_vertices(), cell_cap);
}

CellComplex build_delta_i(const Graph& g, int n, VertexMask i, std::size_t cell_cap) {
  if (independence_status(g, i) == IndependenceStatus::NotIndependent)
    throw parse_error("build_delta_i: set is not independent");
  return build_with_restriction(g, n, i, cell_cap);
}

CellComplex intersect_delta(const Graph& g, int n, const std::vector<VertexMask>& family,
                            std::size_t cell_cap) {
  if (family.empty()) throw parse_error("intersect_delta: empty family");
  VertexMask inter = g.all_vertices();
  for (VertexMask i : family) {
    if (independence_status(g, i) == IndependenceStatus::NotIndependent)
      throw parse_error("intersect_delta: family member is not independent");
    inter &= i;
  }
  CellComplex result = build_delta_i(g, n, inter, cell_cap);

  // dual route: literal intersection of the member complexes
  std::vector<MultiHom> literal = build_delta_i(g, n, family[0], cell_cap).cells;
  for (std::size_t k = 1; k < family.size(); ++k) {
    std::vector<MultiHom> next = build_delta_i(g, n, family[k], cell_cap).cells;
    std::vector<MultiHom> merged;
    std::set_intersection(literal.begin(), literal.end(), next.begin(), next.end(),
                          std::back_inserter(merged), cell_order_less);
    literal = std::move(merged);
  }
  if (literal != result.cells)
    throw verification_error("intersect_delta: literal intersection disagrees with "
                             "the intersection-set subcomplex");
  return result;
}

RestrictedComplex restrict_iso(const CellComplex& delta_pp, VertexMask removed,
                               VertexMask i_kept) {
  const Graph& g = delta_pp.carrier;
  if ((removed & ~g.all_vertices()) != 0 || (i_kept & ~g.all_vertices()) != 0)
    throw parse_error("restrict_iso: unknown vertex");
  int n = delta_pp.n_colors;
  ColorMask top = (n >= 1) ? static_cast<ColorMask>(ColorMask{1} << (n - 1)) : 0;

  std::vector<int> kept = mask_vertices(g.all_vertices() & ~removed);
  RestrictedComplex out;
  out.complex.carrier = induced_subgraph(g, g.all_vertices() & ~removed);
  out.complex.n_colors = n;
  out.bijection.reserve(delta_pp.cells.size());
  for (const MultiHom& c : delta_pp.cells) {
    for (VertexMask m = removed; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      if (c.colors[v] != top)
        throw parse_error("restrict_iso: a cell is not constantly {n} on the removed set");
    }
    MultiHom r;
    r.colors.reserve(kept.size());
    for (std::size_t idx = 0; idx < kept.size(); ++idx) {
      ColorMask set = c.colors[kept[idx]];
      if ((set & top) != 0 && ((i_kept >> kept[idx]) & 1u) == 0)
        throw verification_error("restrict_iso: color n appears outside the kept set");
      r.colors.push_back(set);
    }
    out.bijection.emplace_back(c, r);
    out.complex.cells.push_back(std::move(r));
  }
  std::sort(out.complex.cells.begin(), out.complex.cells.end(), cell_order_less);
  return out;
}

}  // namespace homkit

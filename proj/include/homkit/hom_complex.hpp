#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "homkit/graph.hpp"

namespace homkit {

// Color sets are bitmasks: bit c-1 stands for color c in {1,...,n}.
using ColorMask = std::uint16_t;

constexpr int kMaxColors = 16;
constexpr std::size_t kDefaultCellCap = 200000;

inline int colorset_size(ColorMask m) { return std::popcount(m); }
std::vector<int> colorset_colors(ColorMask m);  // ascending 1-based colors

// Lexicographic order on color sets viewed as ascending color lists.
bool colorset_lex_less(ColorMask a, ColorMask b);

/// One cell of Hom(G,K_n): a nonempty color set per carrier vertex, with
/// adjacent vertices holding disjoint sets. Face order is pointwise inclusion.
struct MultiHom {
  std::vector<ColorMask> colors;  // indexed by carrier vertex

  bool operator==(const MultiHom&) const = default;
};

struct MultiHomHash {
  std::size_t operator()(const MultiHom& c) const {
    std::size_t h = 1469598103934665603ull;
    for (ColorMask m : c.colors) {
      h ^= m;
      h *= 1099511628211ull;
    }
    return h;
  }
};

int cell_dim(const MultiHom& c);
int cell_total_size(const MultiHom& c);

// Pointwise inclusion a(v) ⊆ b(v) for all v.
bool cell_subset(const MultiHom& a, const MultiHom& b);

// Lexicographic on assignments under vertex then color order.
bool cell_lex_less(const MultiHom& a, const MultiHom& b);

// Dimension-major order used for stored complexes and chain bases.
bool cell_order_less(const MultiHom& a, const MultiHom& b);

// All codimension-1 faces with boundary signs: one face per (vertex v with
// |c(v)| >= 2, color x in c(v)), obtained by deleting x from c(v), with sign
// (-1)^(offset(v) + pos(x)) where offset(v) = sum over w < v of (|c(w)|-1)
// and pos(x) is the 0-based rank of x in ascending c(v).
std::vector<std::pair<MultiHom, int>> codim1_faces(const MultiHom& c);

/// Face-poset-closed set of cells over one carrier and color count, sorted in
/// cell_order_less order.
struct CellComplex {
  Graph carrier;
  int n_colors = 0;
  std::vector<MultiHom> cells;

  bool contains(const MultiHom& c) const;
  bool empty() const { return cells.empty(); }
  int dim() const;  // -1 for the empty complex
  std::vector<std::size_t> cell_counts_by_dim() const;
};

// All multihomomorphisms G -> K_n. Throws cap_exceeded past cell_cap.
CellComplex build_hom(const Graph& g, int n, std::size_t cell_cap = kDefaultCellCap);

// Subcomplex of build_hom(g,n) of cells using color n only at vertices of the
// independent set i.
CellComplex build_delta_i(const Graph& g, int n, VertexMask i,
                          std::size_t cell_cap = kDefaultCellCap);

// Intersection of the subcomplexes for every set in the family; equals the
// subcomplex at the intersection of the sets, and both routes are compared
// cell for cell.
CellComplex intersect_delta(const Graph& g, int n, const std::vector<VertexMask>& family,
                            std::size_t cell_cap = kDefaultCellCap);

struct RestrictedComplex {
  CellComplex complex;
  // face-poset order isomorphism: (cell of the input, its restriction)
  std::vector<std::pair<MultiHom, MultiHom>> bijection;
};

// Drops the coordinates of `removed` from every cell; each such coordinate
// must equal exactly {n}. The result lives over carrier minus removed, and
// color n may appear only at vertices of i_kept.
RestrictedComplex restrict_iso(const CellComplex& delta_pp, VertexMask removed,
                               VertexMask i_kept);

}  // namespace homkit

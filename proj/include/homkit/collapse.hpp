#pragma once

#include <vector>

#include "homkit/hom_complex.hpp"

namespace homkit {

struct CollapseStep {
  int vertex;          // the vertex whose color-n pairing produced this step
  MultiHom free_cell;  // codimension-1 face, removed with its unique coface
  MultiHom cofree_cell;
};

/// Machine-checked collapse certificate: the free-face condition was verified
/// at the moment of every removal, and end = start minus all removed pairs.
struct CollapseTrace {
  CellComplex start;
  CellComplex end;
  std::vector<CollapseStep> steps;
};

// Removal order for one vertex pass: cells (all lacking color n at v) sorted
// by decreasing total assignment size, ties lexicographic. Whenever one cell
// pointwise contains another, the larger comes first.
std::vector<MultiHom> collapse_order(std::vector<MultiHom> cells, int v, int n);

// Collapses the subcomplex of cells using color n only inside the independent
// set i onto the part fixed at {n} on i minus i_kept, one vertex pass at a
// time in vertex order. Each removal is verified to be an elementary collapse
// step; a violation throws verification_error with the step index and the
// offending second coface.
CollapseTrace run_collapse(const Graph& g, int n, VertexMask i, VertexMask i_kept,
                           std::size_t cell_cap = kDefaultCellCap);

}  // namespace homkit

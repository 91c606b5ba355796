#include "homkit/collapse.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace homkit {

std::vector<MultiHom> collapse_order(std::vector<MultiHom> cells, int v, int n) {
  ColorMask top = static_cast<ColorMask>(ColorMask{1} << (n - 1));
  for (const MultiHom& c : cells)
    if ((c.colors[v] & top) != 0)
      throw parse_error("collapse_order: a cell already holds color n at the vertex");
  std::sort(cells.begin(), cells.end(), [](const MultiHom& a, const MultiHom& b) {
    int sa = cell_total_size(a);
    int sb = cell_total_size(b);
    if (sa != sb) return sa > sb;
    return cell_lex_less(a, b);
  });
  return cells;
}

namespace {

std::string describe_cell(const Graph& g, const MultiHom& c) {
  std::ostringstream out;
  for (int v = 0; v < static_cast<int>(c.colors.size()); ++v) {
    out << g.labels[v] << ":{";
    bool first = true;
    for (int color : colorset_colors(c.colors[v])) {
      if (!first) out << ",";
      out << color;
      first = false;
    }
    out << "}";
    if (v + 1 < static_cast<int>(c.colors.size())) out << " ";
  }
  return out.str();
}

using CellSet = std::unordered_set<MultiHom, MultiHomHash>;

// Codimension-1 cofaces inside `remaining`: one color added at one vertex.
// Because the remaining set stays face-closed throughout the collapse, a
// strict coface exists exactly when such a one-step coface does, so checking
// these suffices for the uniqueness condition.
std::vector<MultiHom> remaining_cofaces(const CellSet& remaining, const MultiHom& c,
                                        int n) {
  std::vector<MultiHom> out;
  MultiHom candidate = c;
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    for (int color = 1; color <= n; ++color) {
      ColorMask bit = static_cast<ColorMask>(ColorMask{1} << (color - 1));
      if ((c.colors[v] & bit) != 0) continue;
      candidate.colors[v] = static_cast<ColorMask>(c.colors[v] | bit);
      if (remaining.count(candidate)) out.push_back(candidate);
    }
    candidate.colors[v] = c.colors[v];
  }
  return out;
}

}  // namespace

CollapseTrace run_collapse(const Graph& g, int n, VertexMask i, VertexMask i_kept,
                           std::size_t cell_cap) {
  if (independence_status(g, i) == IndependenceStatus::NotIndependent)
    throw parse_error("run_collapse: set is not independent");
  if ((i_kept & ~i) != 0)
    throw parse_error("run_collapse: kept set is not contained in the collapse set");
  if (n < 1) throw parse_error("run_collapse: need at least one color");

  CollapseTrace trace;
  trace.start = build_delta_i(g, n, i, cell_cap);

  CellSet remaining(trace.start.cells.begin(), trace.start.cells.end());
  ColorMask top = static_cast<ColorMask>(ColorMask{1} << (n - 1));

  std::size_t step_index = 0;
  for (VertexMask m = i & ~i_kept; m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    std::vector<MultiHom> candidates;
    for (const MultiHom& c : remaining)
      if ((c.colors[v] & top) == 0) candidates.push_back(c);
    candidates = collapse_order(std::move(candidates), v, n);

    for (const MultiHom& free_cell : candidates) {
      MultiHom cofree = free_cell;
      cofree.colors[v] = static_cast<ColorMask>(free_cell.colors[v] | top);

      std::vector<MultiHom> up = remaining_cofaces(remaining, free_cell, n);
      if (up.size() != 1 || !(up[0] == cofree)) {
        const MultiHom& offender = (!up.empty() && up[0] == cofree && up.size() > 1)
                                       ? up[1]
                                       : (up.empty() ? cofree : up[0]);
        throw verification_error(
            "free-face condition violated at step " + std::to_string(step_index) +
            ": second coface " + describe_cell(g, offender));
      }
      std::vector<MultiHom> star = remaining_cofaces(remaining, cofree, n);
      if (!star.empty())
        throw verification_error(
            "free-face condition violated at step " + std::to_string(step_index) +
            ": paired cell has coface " + describe_cell(g, star[0]));

      remaining.erase(free_cell);
      remaining.erase(cofree);
      trace.steps.push_back(CollapseStep{v, free_cell, cofree});
      ++step_index;
    }

    for (const MultiHom& c : remaining)
      if (c.colors[v] != top)
        throw verification_error("collapse pass left a cell not fixed at {n} on vertex " +
                                 g.labels[v]);
  }

  trace.end.carrier = trace.start.carrier;
  trace.end.n_colors = n;
  trace.end.cells.assign(remaining.begin(), remaining.end());
  std::sort(trace.end.cells.begin(), trace.end.cells.end(), cell_order_less);
  return trace;
}

}  // namespace homkit

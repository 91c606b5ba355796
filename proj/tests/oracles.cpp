#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace homkit::oracle {

std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << slots.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(slots[i]);
    out.push_back(make_graph(n, edges));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  VertexMask seen = 1;
  VertexMask frontier = 1;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m != 0; m &= m - 1)
      next |= g.adj[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

bool set_independent(const Graph& g, VertexMask s) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (((s >> u) & 1) && ((s >> v) & 1) && g.has_edge(u, v)) return false;
  return true;
}

bool set_maximal_independent_within(const Graph& g, VertexMask s, VertexMask universe) {
  if (!set_independent(g, s)) return false;
  for (int w = 0; w < g.n; ++w) {
    if (((universe >> w) & 1) == 0 || ((s >> w) & 1)) continue;
    if (set_independent(g, s | (VertexMask{1} << w))) return false;
  }
  return true;
}

std::vector<VertexMask> maximal_independent_sets_brute(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask all = g.all_vertices();
  for (VertexMask s = 0;; ++s) {
    if (set_maximal_independent_within(g, s, all)) out.push_back(s);
    if (s == all) break;
  }
  std::sort(out.begin(), out.end(), mask_lex_less);
  return out;
}

int chromatic_number_brute(const Graph& g) {
  if (g.n == 0) return 0;
  for (int k = 1; k <= g.n; ++k) {
    std::vector<int> color(g.n, 0);
    while (true) {
      bool proper = true;
      for (auto [u, v] : g.edges())
        if (color[u] == color[v]) {
          proper = false;
          break;
        }
      if (proper) goto found;
      int i = 0;
      while (i < g.n && color[i] == k - 1) color[i++] = 0;
      if (i == g.n) break;
      ++color[i];
    }
    continue;
  found:
    return k;
  }
  return g.n;
}

bool is_covering_brute(const Graph& g, const std::vector<VertexMask>& sets) {
  VertexMask seen = 0;
  for (VertexMask s : sets) {
    if (s == 0 || (s & seen) != 0) return false;
    seen |= s;
  }
  if (seen != g.all_vertices()) return false;
  VertexMask suffix = g.all_vertices();
  for (VertexMask s : sets) {
    if (!set_maximal_independent_within(g, s, suffix)) return false;
    suffix &= ~s;
  }
  return true;
}

namespace {

// every ordered partition of `remaining` into nonempty sets, each exactly once
void ordered_partitions(VertexMask remaining, std::vector<VertexMask>& prefix,
                        const std::function<void(const std::vector<VertexMask>&)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  // enumerate all nonempty subsets of remaining as the next block
  for (VertexMask sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
    prefix.push_back(sub);
    ordered_partitions(remaining & ~sub, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

int chi_dot_brute(const Graph& g) {
  int best = 0;
  std::vector<VertexMask> prefix;
  ordered_partitions(g.all_vertices(), prefix, [&](const std::vector<VertexMask>& parts) {
    if (static_cast<int>(parts.size()) > best && is_covering_brute(g, parts))
      best = static_cast<int>(parts.size());
  });
  return best;
}

long long hom_edge_cell_count(int n) {
  long long total = 0;
  for (int a = 1; a < (1 << n); ++a)
    for (int b = 1; b < (1 << n); ++b)
      if ((a & b) == 0) ++total;
  return total;
}

}  // namespace homkit::oracle

#include "homkit/covering.hpp"

#include <algorithm>
#include <unordered_map>

namespace homkit {

bool is_covering_within(const Graph& g, const Covering& sets, VertexMask universe) {
  VertexMask seen = 0;
  for (VertexMask s : sets) {
    if (s == 0) return false;
    if ((s & ~universe) != 0)
      throw parse_error("is_covering: unknown vertex in set");
    if ((s & seen) != 0) return false;  // not disjoint
    seen |= s;
  }
  if (seen != universe) return false;
  VertexMask suffix = universe;
  for (VertexMask s : sets) {
    if (independence_status_within(g, s, suffix) != IndependenceStatus::MaximalIndependent)
      return false;
    suffix &= ~s;
  }
  return true;
}

bool is_covering(const Graph& g, const Covering& sets) {
  return is_covering_within(g, sets, g.all_vertices());
}

namespace {

constexpr int kChiDotVertexCap = 16;

struct ChiDotMemo {
  const Graph& g;
  // remaining-vertex mask -> (value, lexicographically smallest maximizing I)
  std::unordered_map<VertexMask, std::pair<int, VertexMask>> table;

  int solve(VertexMask remaining) {
    if (remaining == 0) return 0;
    auto it = table.find(remaining);
    if (it != table.end()) return it->second.first;
    int best = -1;
    VertexMask best_set = 0;
    for (VertexMask i : maximal_independent_sets_within(g, remaining)) {
      int sub = 1 + solve(remaining & ~i);
      if (sub > best) {  // strict: MIS list is lex-sorted, first winner kept
        best = sub;
        best_set = i;
      }
    }
    table.emplace(remaining, std::make_pair(best, best_set));
    return best;
  }
};

}  // namespace

ChiDotResult chi_dot(const Graph& g) {
  if (g.n > kChiDotVertexCap)
    throw cap_exceeded("chi_dot: graph exceeds the " +
                       std::to_string(kChiDotVertexCap) + "-vertex bound");
  ChiDotMemo memo{g, {}};
  ChiDotResult result;
  result.value = memo.solve(g.all_vertices());
  VertexMask remaining = g.all_vertices();
  while (remaining != 0) {
    VertexMask i = memo.table.at(remaining).second;
    result.witness.push_back(i);
    remaining &= ~i;
  }
  return result;
}

Covering partition_to_covering(const Graph& g, const std::vector<VertexMask>& parts) {
  VertexMask seen = 0;
  for (VertexMask p : parts) {
    if ((p & ~g.all_vertices()) != 0)
      throw parse_error("partition_to_covering: unknown vertex in part");
    if ((p & seen) != 0)
      throw parse_error("partition_to_covering: parts are not disjoint");
    if (p != 0 && independence_status(g, p) == IndependenceStatus::NotIndependent)
      throw parse_error("partition_to_covering: part is not independent");
    seen |= p;
  }
  if (seen != g.all_vertices())
    throw parse_error("partition_to_covering: parts do not cover the vertex set");

  Covering out;
  VertexMask remaining = g.all_vertices();
  for (VertexMask p : parts) {
    VertexMask s = p & remaining;
    if (s == 0) continue;
    for (VertexMask m = remaining & ~s; m != 0; m &= m - 1) {
      int w = std::countr_zero(m);
      if ((g.adj[w] & s) == 0) s |= VertexMask{1} << w;
    }
    out.push_back(s);
    remaining &= ~s;
  }
  if (!is_covering(g, out))
    throw verification_error("partition_to_covering: greedy result is not a covering");
  return out;
}

Covering extend_covering_with_vertex(const Graph& g, int v, const Covering& cov) {
  if (v < 0 || v >= g.n)
    throw parse_error("extend_covering_with_vertex: vertex not in graph");
  VertexMask vbit = VertexMask{1} << v;
  VertexMask rest = g.all_vertices() & ~vbit;
  if (!is_covering_within(g, cov, rest))
    throw parse_error("extend_covering_with_vertex: input is not a covering of g minus v");

  // v joins the first set holding none of its neighbors
  for (std::size_t j = 0; j < cov.size(); ++j) {
    if ((g.adj[v] & cov[j]) == 0) {
      Covering out = cov;
      out[j] |= vbit;
      if (!is_covering(g, out))
        throw verification_error("extend_covering_with_vertex: insertion broke the covering");
      return out;
    }
  }

  // every set holds a neighbor of v: prepend {v} when that is maximal
  Covering out = cov;
  out.insert(out.begin(), vbit);
  if (is_covering(g, out)) return out;

  // {v} has a non-neighbor somewhere, so the bare singleton is not maximal;
  // reorder-and-enlarge the prepended partition into a covering instead
  out = partition_to_covering(g, out);
  if (out.size() < cov.size())
    throw verification_error("extend_covering_with_vertex: enlargement lost sets");
  return out;
}

Covering prepend_independent_set(const Graph& g, VertexMask i, const Covering& cov) {
  if (independence_status(g, i) != IndependenceStatus::MaximalIndependent)
    throw parse_error("prepend_independent_set: set is not maximal independent");
  if (!is_covering_within(g, cov, g.all_vertices() & ~i))
    throw parse_error("prepend_independent_set: input is not a covering of g minus the set");
  Covering out;
  out.reserve(cov.size() + 1);
  out.push_back(i);
  out.insert(out.end(), cov.begin(), cov.end());
  if (!is_covering(g, out))
    throw verification_error("prepend_independent_set: result is not a covering");
  return out;
}

}  // namespace homkit

#pragma once

#include <vector>

#include "homkit/graph.hpp"

namespace homkit {

// Ordered sequence of independent vertex sets I_1,...,I_k that partitions the
// carrier, with each I_i maximal independent in the subgraph induced on
// I_i ∪ ... ∪ I_k. Masks are relative to the carrier graph's vertex order.
using Covering = std::vector<VertexMask>;

struct ChiDotResult {
  int value = 0;
  Covering witness;
};

bool is_covering(const Graph& g, const Covering& sets);

// Same cascade check inside the subgraph induced on `universe`; the sets must
// partition `universe`.
bool is_covering_within(const Graph& g, const Covering& sets, VertexMask universe);

// Maximum number of sets over all coverings, with a witness covering.
// Exponential-exact via memoized recursion over vertex subsets.
ChiDotResult chi_dot(const Graph& g);

// Turns an ordered partition into independent sets into a covering by greedy
// enlargement; later parts emptied by the enlargement are dropped.
Covering partition_to_covering(const Graph& g, const std::vector<VertexMask>& parts);

// Extends a covering of g minus one vertex to a covering of g, inserting v
// into the first compatible set or prepending {v}.
Covering extend_covering_with_vertex(const Graph& g, int v, const Covering& cov);

// Prepends a maximal independent set of g to a covering of g minus that set.
Covering prepend_independent_set(const Graph& g, VertexMask i, const Covering& cov);

}  // namespace homkit

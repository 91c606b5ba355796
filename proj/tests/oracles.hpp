#pragma once

// Brute-force reference routes for the test suites. Everything here is
// derived straight from the definitions with exhaustive enumeration and no
// calls into the code paths it checks.

#include <vector>

#include "homkit/graph.hpp"

namespace homkit::oracle {

// all labeled graphs on exactly n vertices, every edge subset
std::vector<Graph> all_graphs(int n);

bool is_connected(const Graph& g);

// pairwise edge scans only
bool set_independent(const Graph& g, VertexMask s);
bool set_maximal_independent_within(const Graph& g, VertexMask s, VertexMask universe);

// filter of all 2^|V| subsets
std::vector<VertexMask> maximal_independent_sets_brute(const Graph& g);

// minimum k such that some assignment V -> {0..k-1} is proper, by trying all
// assignments; 0 for the empty graph
int chromatic_number_brute(const Graph& g);

// checks the covering conditions directly on an ordered list of sets
bool is_covering_brute(const Graph& g, const std::vector<VertexMask>& sets);

// enumerates every ordered partition of V into nonempty sets and filters
// through is_covering_brute; returns the maximum length (0 for empty graph)
int chi_dot_brute(const Graph& g);

// number of pairs of disjoint nonempty color subsets, the cell count of the
// Hom complex of an edge
long long hom_edge_cell_count(int n);

}  // namespace homkit::oracle

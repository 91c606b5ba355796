#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "homkit/errors.hpp"

namespace homkit {

// Vertex subsets are bitmasks over the carrier graph's vertex order.
using VertexMask = std::uint32_t;

constexpr int kMaxVertices = 32;

inline int mask_popcount(VertexMask m) { return std::popcount(m); }

// Lexicographic order on vertex subsets viewed as ascending vertex lists,
// e.g. {0,2} < {1} and {1} < {1,3}.
bool mask_lex_less(VertexMask a, VertexMask b);

std::vector<int> mask_vertices(VertexMask m);

enum class GraphFormat { Auto, EdgeList, Graph6 };

enum class IndependenceStatus { NotIndependent, Independent, MaximalIndependent };

/// Finite simple graph with a fixed total vertex order. The order is set at
/// parse time and every downstream enumeration and sign convention derives
/// from it.
struct Graph {
  int n = 0;
  std::vector<std::string> labels;  // distinct, one per vertex
  std::vector<VertexMask> adj;      // dense bit row per vertex

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int v) const { return mask_popcount(adj[v]); }
  VertexMask all_vertices() const {
    return n == kMaxVertices ? ~VertexMask{0} : ((VertexMask{1} << n) - 1);
  }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  // -1 when no vertex carries the label
  int vertex_by_label(const std::string& label) const;

  bool operator==(const Graph&) const = default;
};

// Builds a graph on n vertices labeled "0".."n-1" from an edge list.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::Auto);
Graph parse_edge_list(const std::string& text);
Graph parse_graph6(const std::string& text);

std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);

int max_degree(const Graph& g);

// Subgraph induced on `keep`; vertex order inherited from g.
Graph induced_subgraph(const Graph& g, VertexMask keep);

IndependenceStatus independence_status(const Graph& g, VertexMask s);

// Same check but with maximality judged inside the subgraph induced on
// `universe` (s must be contained in it).
IndependenceStatus independence_status_within(const Graph& g, VertexMask s,
                                              VertexMask universe);

// All maximal independent sets, lexicographic by vertex order. The empty
// graph yields [empty set].
std::vector<VertexMask> maximal_independent_sets(const Graph& g);
std::vector<VertexMask> maximal_independent_sets_within(const Graph& g,
                                                        VertexMask universe);

// Exact chromatic number by branch and bound; 0 for the empty graph.
int chromatic_number(const Graph& g);

}  // namespace homkit

#include <doctest.h>

#include "homkit/graph.hpp"
#include "oracles.hpp"

using namespace homkit;

namespace {

Graph p3() { return make_graph(3, {{0, 1}, {1, 2}}); }
Graph k3() { return make_graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
Graph c5() { return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("edge list parsing") {
  Graph g = parse_graph("3\n0 1\n1 2", GraphFormat::EdgeList);
  CHECK(g == p3());
  CHECK(g.labels == std::vector<std::string>{"0", "1", "2"});

  CHECK(parse_graph("2\n0 1", GraphFormat::EdgeList) == make_graph(2, {{0, 1}}));

  SUBCASE("comments, blank lines, duplicate edges") {
    Graph h = parse_edge_list("# path\n\n3\n0 1\n# mid\n1 2\n1 0\n");
    CHECK(h == p3());
  }
  SUBCASE("rejects") {
    CHECK_THROWS_AS(parse_edge_list("3\n0 3"), parse_error);   // out of range
    CHECK_THROWS_AS(parse_edge_list("3\n1 1"), parse_error);   // loop
    CHECK_THROWS_AS(parse_edge_list("x\n0 1"), parse_error);   // bad header
    CHECK_THROWS_AS(parse_edge_list("3 4\n0 1"), parse_error); // extra token
    CHECK_THROWS_AS(parse_edge_list(""), parse_error);
    CHECK_THROWS_AS(parse_edge_list("2\n0"), parse_error);     // malformed edge
  }
}

TEST_CASE("graph6 parsing") {
  // 'D' = 5 vertices, '~' and '{' pack the complete upper triangle
  Graph g = parse_graph("D~{", GraphFormat::Graph6);
  CHECK(g.n == 5);
  CHECK(g.edge_count() == 10);  // K5
  CHECK(to_graph6(g) == "D~{");

  CHECK(parse_graph6(">>graph6<<D~{").n == 5);
  CHECK(parse_graph6("?").n == 0);

  CHECK_THROWS_AS(parse_graph6(""), parse_error);
  CHECK_THROWS_AS(parse_graph6("D~"), parse_error);    // truncated
  CHECK_THROWS_AS(parse_graph6("D~{{"), parse_error);  // trailing bytes
}

TEST_CASE("format autodetection") {
  CHECK(parse_graph("3\n0 1\n1 2") == p3());
  CHECK(parse_graph("D~{").n == 5);
}

TEST_CASE("parse-serialize round trip on all graphs up to 6 vertices") {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : oracle::all_graphs(n)) {
      CHECK(parse_edge_list(to_edge_list(g)) == g);
      CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("max_degree") {
  CHECK(max_degree(k3()) == 2);
  CHECK(max_degree(make_graph(3, {})) == 0);
  CHECK(max_degree(p3()) == 2);
  CHECK(max_degree(make_graph(0, {})) == 0);
}

TEST_CASE("induced_subgraph") {
  Graph ends = induced_subgraph(p3(), 0b101);
  CHECK(ends.n == 2);
  CHECK(ends.edge_count() == 0);
  CHECK(ends.labels == std::vector<std::string>{"0", "2"});
  Graph k2 = induced_subgraph(k3(), 0b110);
  CHECK(k2.n == 2);
  CHECK(k2.has_edge(0, 1));
  CHECK(k2.labels == std::vector<std::string>{"1", "2"});
  CHECK(induced_subgraph(p3(), 0b111) == p3());
  CHECK_THROWS_AS(induced_subgraph(p3(), 0b1000), parse_error);

  SUBCASE("composition: induced(induced(g,A),B') = induced(g,B) for B inside A") {
    Graph g = c5();
    VertexMask a = 0b11101;  // drop vertex 1
    VertexMask b = 0b01101;  // then drop vertex 4 too
    Graph via_a = induced_subgraph(g, a);
    // b re-expressed in via_a's vertex order: vertices 0,2,3 sit at 0,1,2
    Graph two_step = induced_subgraph(via_a, 0b0111);
    CHECK(two_step == induced_subgraph(g, b));
  }
}

TEST_CASE("independence_status") {
  CHECK(independence_status(p3(), 0b101) == IndependenceStatus::MaximalIndependent);
  CHECK(independence_status(p3(), 0b001) == IndependenceStatus::Independent);
  CHECK(independence_status(make_graph(2, {{0, 1}}), 0b11) ==
        IndependenceStatus::NotIndependent);
  // empty set: never maximal in a nonempty graph, maximal in the empty graph
  CHECK(independence_status(p3(), 0) == IndependenceStatus::Independent);
  CHECK(independence_status(make_graph(0, {}), 0) ==
        IndependenceStatus::MaximalIndependent);
  CHECK_THROWS_AS(independence_status(p3(), 0b1000), parse_error);
}

TEST_CASE("maximal_independent_sets on named graphs") {
  CHECK(maximal_independent_sets(p3()) == std::vector<VertexMask>{0b101, 0b010});
  CHECK(maximal_independent_sets(k3()) == std::vector<VertexMask>{0b001, 0b010, 0b100});
  CHECK(maximal_independent_sets(make_graph(2, {})) == std::vector<VertexMask>{0b11});
  CHECK(maximal_independent_sets(make_graph(0, {})) == std::vector<VertexMask>{0});
}

TEST_CASE("maximal_independent_sets matches brute force on all graphs up to 6") {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : oracle::all_graphs(n))
      CHECK(maximal_independent_sets(g) == oracle::maximal_independent_sets_brute(g));
}

TEST_CASE("chromatic_number") {
  CHECK(chromatic_number(k3()) == 3);
  CHECK(chromatic_number(make_graph(3, {})) == 1);
  CHECK(chromatic_number(c5()) == 3);
  CHECK(chromatic_number(make_graph(0, {})) == 0);

  SUBCASE("matches exhaustive search on all graphs up to 5") {
    for (int n = 0; n <= 5; ++n)
      for (const Graph& g : oracle::all_graphs(n))
        CHECK(chromatic_number(g) == oracle::chromatic_number_brute(g));
  }
}

TEST_CASE("mask_lex_less orders vertex lists") {
  CHECK(mask_lex_less(0b101, 0b010));   // {0,2} < {1}
  CHECK(!mask_lex_less(0b010, 0b101));
  CHECK(mask_lex_less(0b001, 0b101));   // {0} < {0,2}, proper prefix
  CHECK(!mask_lex_less(0b101, 0b101));
}

TEST_SUITE_END();

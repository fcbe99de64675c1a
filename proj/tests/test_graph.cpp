#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "gldp/graph.hpp"

using namespace gldp;

TEST_CASE("pair indices enumerate the upper triangle row by row") {
  const int n = 10;
  std::uint64_t expected = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      CHECK(PairBitset::pair_index(n, i, j) == expected);
      ++expected;
    }
  }
  CHECK(expected == 45);
}

TEST_CASE("bitset get/set is symmetric and rejects bad pairs") {
  PairBitset bits(5);
  CHECK_FALSE(bits.get(1, 3));
  bits.set(3, 1, true);
  CHECK(bits.get(1, 3));
  CHECK(bits.get(3, 1));
  CHECK(bits.count_set() == 1);
  bits.set(1, 3, false);
  CHECK(bits.count_set() == 0);

  CHECK_FALSE(bits.get(2, 2));  // diagonal reads as absent
  CHECK_THROWS_AS(bits.set(2, 2, true), std::invalid_argument);
  CHECK_THROWS_AS((void)bits.get(0, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)bits.get(-1, 2), std::invalid_argument);
}

TEST_CASE("graph edges, degrees, and equality") {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 1);

  Graph h(4);
  h.add_edge(2, 3);
  h.add_edge(1, 0);  // reversed order normalizes
  h.add_edge(1, 2);
  h.add_edge(1, 2);  // duplicate collapses
  CHECK(g == h);

  CHECK_THROWS_AS(h.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(h.add_edge(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("adjacency lists are sorted neighbor sets") {
  const Graph g = build_graph(5, {{0, 3}, {0, 1}, {3, 4}});
  const auto adj = adjacency_lists(g);
  CHECK(adj[0] == std::vector<int>{1, 3});
  CHECK(adj[1] == std::vector<int>{0});
  CHECK(adj[2].empty());
  CHECK(adj[3] == std::vector<int>{0, 4});
}

TEST_CASE("edge list text round-trips") {
  const Graph g = build_graph(5, {{1, 4}, {0, 2}, {2, 3}});
  const std::string text = write_edge_list(g);
  CHECK(text == "5\n0 2\n1 4\n2 3\n");
  CHECK(read_edge_list(text) == g);
}

TEST_CASE("edge list reader skips comments and tolerates swapped endpoints") {
  const Graph g = read_edge_list(
      "# node count first\n"
      "4\n"
      "\n"
      "3 1\n"
      "# a comment line\n"
      "0 1\n");
  CHECK(g == build_graph(4, {{1, 3}, {0, 1}}));
}

TEST_CASE("edge list reader rejects malformed input") {
  CHECK_THROWS_AS(read_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("x\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("3\n0 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("3\n0 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("3\n1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("3\n0\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list("-2\n"), std::invalid_argument);
}

TEST_CASE("graph files save and load") {
  const Graph g = build_graph(6, {{0, 5}, {2, 4}});
  const std::string path = "test_graph_roundtrip.edges";
  save_graph_file(g, path);
  CHECK(load_graph_file(path) == g);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_graph_file("does_not_exist.edges"),
                  std::invalid_argument);
}

#include <gtest/gtest.h>

#include <random>

#include "lks/io.hpp"

using namespace lks;

TEST(Graph6, DecodesKnownString) {
  // 10 pair bits 000000 1111(00): edges {0,4},{1,4},{2,4},{3,4}
  Graph g = parse_graph6("D?{");
  EXPECT_EQ(g.n(), 5);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(to_graph6(g), "D?{");
  EXPECT_EQ(parse_graph6(">>graph6<<D?{\n").m(), 4);
}

TEST(Graph6, RoundTrip) {
  std::mt19937_64 rng(8);
  for (int n : {0, 1, 2, 5, 13, 62, 63, 64, 100}) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    auto s = to_graph6(g);
    EXPECT_EQ(parse_graph6(s), g) << n;
    EXPECT_EQ(parse_graph(s), g);
  }
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(parse_graph6("D?"), InputError);
  EXPECT_THROW(parse_graph6("D?{?"), InputError);
  EXPECT_THROW(parse_graph6("D? "), InputError);
  EXPECT_THROW(parse_graph6(""), InputError);
  // padding bits must be zero: 'D?|' sets the low padding bit
  EXPECT_THROW(parse_graph6("D?|"), InputError);
  try {
    parse_graph6("D?");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("byte 2"), std::string::npos) << e.what();
  }
}

TEST(EdgeList, ParsesAndRejects) {
  Graph t = parse_graph("3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(t.m(), 3);
  EXPECT_EQ(t.degree(0), 2);
  EXPECT_EQ(parse_edgelist(to_edgelist(t)), t);
  EXPECT_THROW(parse_edgelist("3 2\n0 1\n"), InputError);
  EXPECT_THROW(parse_edgelist("3 1\n0 3\n"), InputError);
  EXPECT_THROW(parse_edgelist("3 1\n1 1\n"), InputError);
  EXPECT_THROW(parse_edgelist("3 1\n0 x\n"), InputError);
  try {
    parse_edgelist("3 1\n0 7\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("byte 6"), std::string::npos) << e.what();
  }
}

TEST(TreeFormat, ParentArrayAndEdgeList) {
  auto t = parse_tree("4 0\n-1 0 1 2\n");
  EXPECT_EQ(t.n(), 4);
  EXPECT_EQ(t.root(), 0);
  EXPECT_EQ(t.parent(3), 2);
  EXPECT_EQ(parse_tree(to_tree_text(t)).parents(), t.parents());
  auto e = parse_tree("4 3\n0 1\n1 2\n2 3\n", 2);
  EXPECT_EQ(e.root(), 2);
  EXPECT_EQ(e.parent(0), 1);
  EXPECT_THROW(parse_tree("3 0\n-1 0\n"), InputError);
  EXPECT_THROW(parse_tree("3 0\n0 0 1\n"), InputError);
  EXPECT_THROW(parse_tree("3 0\n-1 2 1\n"), InputError);
}

TEST(VertexList, Parses) {
  EXPECT_EQ(parse_vertex_list("1,2, 3\n4"), (VertexSet{1, 2, 3, 4}));
  EXPECT_THROW(parse_vertex_list("1 a"), InputError);
}

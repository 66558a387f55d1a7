#include <gtest/gtest.h>

#include <random>

#include "lks/graph.hpp"

using namespace lks;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Edge count between disjoint sets by scanning all pairs.
long long pair_count(const Graph& g, const VertexSet& X, const VertexSet& Y) {
  long long e = 0;
  for (int x : X)
    for (int y : Y) e += g.has_edge(x, y);
  return e;
}

}  // namespace

TEST(Rational, ParseAndCompare) {
  EXPECT_EQ(Rational::parse("0.003"), Rational(3, 1000));
  EXPECT_EQ(Rational::parse("-2/4"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("1e-2"), Rational(1, 100));
  EXPECT_EQ(Rational::parse("2.5e1"), Rational(25));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_THROW(Rational::parse("abc"), InputError);
  EXPECT_THROW(Rational(1, 0), InputError);
}

TEST(BuildGraph, Examples) {
  Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  for (int v = 0; v < 3; ++v) EXPECT_EQ(tri.degree(v), 2);
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(p4.degree(0), 1);
  EXPECT_EQ(p4.degree(1), 2);
  EXPECT_EQ(p4.degree(2), 2);
  EXPECT_EQ(p4.degree(3), 1);
  Graph e = build_graph(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(e.m(), 1);
}

TEST(BuildGraph, Errors) {
  EXPECT_THROW(build_graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(build_graph(3, {{-1, 0}}), InputError);
  EXPECT_THROW(build_graph(3, {{1, 1}}), InputError);
}

TEST(BuildGraph, SymmetricAndIrreflexive) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    Graph g = random_graph(12, 0.4, rng);
    long long sum = 0;
    for (int u = 0; u < g.n(); ++u) {
      EXPECT_FALSE(g.has_edge(u, u));
      int d = 0;
      for (int v = 0; v < g.n(); ++v) {
        EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
        d += g.has_edge(u, v);
      }
      EXPECT_EQ(d, g.degree(u));
      sum += d;
    }
    EXPECT_EQ(sum, 2 * g.m());
  }
}

TEST(AvgDeg, Examples) {
  Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(avg_deg(tri, {0}, {1, 2}), Rational(2));
  Graph k23 = build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(avg_deg(k23, {0, 1}, {2, 3, 4}), Rational(3));
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(avg_deg(p4, {1, 2}, {0, 3}), Rational(1));
  EXPECT_EQ(avg_deg(p4, {0, 1, 2, 3}), Rational(3, 2));
  EXPECT_THROW(avg_deg(p4, {}, {0}), InputError);
  EXPECT_THROW(avg_deg(p4, {0, 1}, {1, 2}), InputError);
}

TEST(AvgDeg, ExactTimesSize) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    Graph g = random_graph(10, 0.5, rng);
    VertexSet X, Y;
    for (int v = 0; v < 10; ++v) {
      int r = static_cast<int>(rng() % 3);
      if (r == 0) X.push_back(v);
      if (r == 1) Y.push_back(v);
    }
    if (X.empty()) continue;
    Rational a = avg_deg(g, X, Y);
    EXPECT_EQ(a * Rational(static_cast<long long>(X.size())), Rational(pair_count(g, X, Y)));
  }
}

TEST(ClassifyLks, Examples) {
  auto k4 = complete_graph(4);
  auto c = classify_lks(k4, 2);
  EXPECT_EQ(c.L.size(), 4u);
  EXPECT_TRUE(c.holds);
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  c = classify_lks(p4, 2);
  EXPECT_EQ(c.L, (VertexSet{1, 2}));
  EXPECT_TRUE(c.holds);
  Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  c = classify_lks(star, 2);
  EXPECT_EQ(c.L, (VertexSet{0}));
  EXPECT_FALSE(c.holds);
  EXPECT_THROW(classify_lks(star, 0), InputError);
  EXPECT_THROW(classify_lks(star, 4), InputError);
}

TEST(NormalizeHost, Examples) {
  Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(normalize_host(tri, 2), tri);
  Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(normalize_host(p3, 1), p3);
  // only the center has degree 2, so P3 is not an LKS graph for k = 2
  EXPECT_THROW(normalize_host(p3, 2), PreconditionError);
  // K4 on 0..3 plus pendant 4 at vertex 0.
  Graph g = complete_graph(5);
  for (int v = 1; v < 4; ++v) g.remove_edge(v, 4);
  Graph expect = complete_graph(4);
  expect = build_graph(5, expect.edges());
  EXPECT_EQ(normalize_host(g, 3), expect);
  Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_THROW(normalize_host(star, 2), PreconditionError);
}

TEST(NormalizeHost, PostconditionsOnRandomGraphs) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    int n = 4 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, 0.45, rng);
    int k = 1 + static_cast<int>(rng() % (n - 1));
    if (!classify_lks(g, k).holds) continue;
    Graph h = normalize_host(g, k);
    auto c = classify_lks(h, k);
    EXPECT_TRUE(c.holds);
    for (auto [u, v] : h.edges()) {
      EXPECT_TRUE(g.has_edge(u, v));
      EXPECT_FALSE(!c.large[u] && !c.large[v]);
    }
    // Either |L| <= |S|+1 or no L-S edge is left.
    if (c.L.size() >= c.S.size() + 2)
      for (auto [u, v] : h.edges()) EXPECT_TRUE(c.large[u] && c.large[v]);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(MinDegreeCore, Examples) {
  Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(min_degree_core(star, Rational(3, 4)).vertices, (VertexSet{0, 1, 2, 3}));
  Graph tp = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  EXPECT_EQ(min_degree_core(tp, Rational(2)).vertices, (VertexSet{0, 1, 2}));
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(min_degree_core(p4, Rational(2)).vertices.empty());
}

TEST(MinDegreeCore, MatchesLargestSubsetOracle) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 150; ++it) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.4, rng);
    Rational d(static_cast<long long>(rng() % 7), 2);
    // The core is the union of all vertex sets of min induced degree >= d,
    // i.e. the largest one.
    unsigned best = 0;
    int best_size = 0;
    for (unsigned s = 1; s < (1u << n); ++s) {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        if (!(s >> v & 1)) continue;
        int deg = 0;
        for (int w : g.neighbors(v)) deg += s >> w & 1;
        if (Rational(deg) < d) ok = false;
      }
      if (ok && __builtin_popcount(s) > best_size) {
        best = s;
        best_size = __builtin_popcount(s);
      }
    }
    VertexSet expect;
    for (int v = 0; v < n; ++v)
      if (best >> v & 1) expect.push_back(v);
    EXPECT_EQ(min_degree_core(g, d).vertices, expect);
    if (g.m() > 0) EXPECT_FALSE(min_degree_core(g, avg_deg(g, all_vertices(n)) / Rational(2)).vertices.empty());
  }
}

TEST(ClosestInteger, Examples) {
  EXPECT_EQ(ci(1.4), 1);
  EXPECT_EQ(ci(1.5), 2);
  EXPECT_EQ(ci(3.0), 3);
  EXPECT_EQ(ci(Rational(7, 5)), 1);
  EXPECT_EQ(ci(Rational(3, 2)), 2);
  EXPECT_EQ(ci(Rational(13, 4)), 3);
}

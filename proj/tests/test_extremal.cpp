#include <gtest/gtest.h>

#include <functional>
#include <queue>
#include <random>

#include "lks/extremal.hpp"

using namespace lks;

namespace {

struct Built {
  Graph g;
  ExtremalPartition p;
};

void clique(std::vector<std::pair<int, int>>& e, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) e.emplace_back(s[i], s[j]);
}

void join(std::vector<std::pair<int, int>>& e, const VertexSet& a, const VertexSet& b) {
  for (int x : a)
    for (int y : b) e.emplace_back(x, y);
}

VertexSet range(int lo, int n) {
  VertexSet s(n);
  for (int i = 0; i < n; ++i) s[i] = lo + i;
  return s;
}

Built two_cliques(int k, bool crossing_matching) {
  Built b;
  std::vector<std::pair<int, int>> e;
  auto A = range(0, k + 1), B = range(k + 1, k + 1);
  clique(e, A);
  clique(e, B);
  if (crossing_matching)
    for (int i = 0; i <= k; ++i) e.emplace_back(A[i], B[i]);
  b.g = build_graph(2 * k + 2, e);
  b.p.clusters = {A, B};
  return b;
}

// Cluster i = A_i (clique of a) joined to B_i (independent, b_i vertices).
struct Split {
  Graph g;
  ExtremalPartition p;
  std::vector<VertexSet> A, B;
};

Split split_clusters(int a, const std::vector<int>& bs, const std::function<void(Split&, std::vector<std::pair<int, int>>&)>& extra,
                     int extra_vertices = 0) {
  Split s;
  std::vector<std::pair<int, int>> e;
  int next = 0;
  for (int b : bs) {
    s.A.push_back(range(next, a));
    next += a;
    s.B.push_back(range(next, b));
    next += b;
  }
  for (std::size_t i = 0; i < bs.size(); ++i) {
    clique(e, s.A[i]);
    join(e, s.A[i], s.B[i]);
    VertexSet c = s.A[i];
    c.insert(c.end(), s.B[i].begin(), s.B[i].end());
    s.p.clusters.push_back(c);
  }
  int n = next + extra_vertices;
  s.g = Graph(n);
  extra(s, e);
  s.g = build_graph(n, e);
  return s;
}

bool all_pass(const std::vector<BulletResult>& bs) {
  for (const auto& b : bs)
    if (!b.pass) return false;
  return true;
}

const BulletResult& bullet(const ExtremalReport& r, const std::string& prefix) {
  for (const auto& b : r.bullets)
    if (b.name.rfind(prefix, 0) == 0) return b;
  throw std::runtime_error("no bullet " + prefix);
}

// k = 20, two clusters of A(10) + B(10), a perfect matching between A_1 and A_2.
Split deficient_a1() {
  return split_clusters(10, {10, 10}, [](Split& s, auto& e) {
    for (int i = 0; i < 10; ++i) e.emplace_back(s.A[0][i], s.A[1][i]);
  });
}

}  // namespace

TEST(Partition, Parse) {
  auto p = parse_partition("0 1 2\n# comment\n5 4 3\n~ 6 7\n");
  ASSERT_EQ(p.clusters.size(), 2u);
  EXPECT_EQ(p.clusters[1], (VertexSet{3, 4, 5}));
  EXPECT_EQ(p.residual, (VertexSet{6, 7}));
  EXPECT_THROW(parse_partition("0 1\n~ 2\n3\n"), InputError);
  EXPECT_THROW(parse_partition("0 x\n"), InputError);
}

TEST(ValidateExtremal, TwoCliques) {
  int k = 10;
  auto b = two_cliques(k, false);
  auto rep = validate_extremal(b.g, b.p, Rational(2, k), Rational(1, 4), k);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.bullets.size(), 6u);
  EXPECT_EQ(rep.lambda, 2);
  EXPECT_EQ(rep.theta, 2);
}

TEST(ValidateExtremal, CrossingMatchingHitsCutBound) {
  // e(V_i, rest) = k+1 against beta k^2 = k
  int k = 10;
  auto b = two_cliques(k, true);
  auto rep = validate_extremal(b.g, b.p, Rational(1, k), Rational(1, 4), k);
  EXPECT_FALSE(bullet(rep, "e(V_i").pass);
  EXPECT_TRUE(bullet(rep, "(1/2-beta)k").pass);
  // one more unit of beta and the cut bound holds: k+1 < 2k
  auto rep2 = validate_extremal(b.g, b.p, Rational(2, k), Rational(1, 4), k);
  EXPECT_TRUE(bullet(rep2, "e(V_i").pass);
}

TEST(ValidateExtremal, SmallResidualFails) {
  int k = 10;
  auto b = two_cliques(k, false);
  Graph g(2 * k + 4);
  for (auto [u, v] : b.g.edges()) g.add_edge(u, v);
  b.p.residual = {2 * k + 2, 2 * k + 3};  // sigma k / 2 = 2
  auto rep = validate_extremal(g, b.p, Rational(2, k), Rational(2, 5), k);
  EXPECT_FALSE(bullet(rep, "V~ empty").pass);
  EXPECT_FALSE(rep.ok);
}

TEST(ValidateExtremal, NotAPartition) {
  auto b = two_cliques(4, false);
  b.p.clusters[1].pop_back();
  EXPECT_THROW(validate_extremal(b.g, b.p, Rational(1, 2), Rational(1, 4), 4), InputError);
  b.p.clusters[1].push_back(0);
  EXPECT_THROW(validate_extremal(b.g, b.p, Rational(1, 2), Rational(1, 4), 4), InputError);
}

TEST(ClusterSets, TwoCliquesAbundant) {
  int k = 10;
  auto b = two_cliques(k, false);
  auto cs = cluster_sets(b.g, b.p, k, Rational(1, 5));
  EXPECT_EQ(cs.Li[0], b.p.clusters[0]);
  EXPECT_EQ(cs.Li[1], b.p.clusters[1]);
  EXPECT_TRUE(cs.is_abundant());
  EXPECT_EQ(cs.abundant, (std::vector<int>{0, 1}));
  EXPECT_THROW(find_start_vertex(b.g, cs), PreconditionError);
  EXPECT_THROW(deficient_cones(b.g, cs), PreconditionError);
}

TEST(ClusterSets, SplitClustersDeficient) {
  auto s = deficient_a1();
  auto rep = validate_extremal(s.g, s.p, Rational(1, 20), Rational(1, 4), 20);
  EXPECT_TRUE(rep.ok);
  auto cs = cluster_sets(s.g, s.p, 20, Rational(1, 5));
  EXPECT_FALSE(cs.is_abundant());
  EXPECT_EQ(cs.Li[0], s.A[0]);
  EXPECT_EQ(cs.Li[1], s.A[1]);
  EXPECT_EQ(cs.S_heart[0], s.B[0]);
  EXPECT_EQ(cs.S_diamond[1], s.B[1]);
  EXPECT_TRUE(overlapping_L(cs).empty());
}

TEST(ClusterSets, ResidualVerticesInNoLi) {
  int k = 10;
  auto b = two_cliques(k, false);
  // V~: a K5 hanging off nothing
  std::vector<std::pair<int, int>> e = b.g.edges();
  VertexSet R = range(2 * k + 2, 5);
  clique(e, R);
  Graph g = build_graph(2 * k + 7, e);
  b.p.residual = R;
  auto cs = cluster_sets(g, b.p, k, Rational(1, 5));
  for (const auto& li : cs.Li)
    for (int v : R) EXPECT_FALSE(std::binary_search(li.begin(), li.end(), v));
  EXPECT_FALSE(cs.residual_empty);
}

TEST(ConnectingEdge, A1) {
  auto s = deficient_a1();
  auto cs = cluster_sets(s.g, s.p, 20, Rational(1, 5));
  auto st = find_connecting_edge(s.g, cs);
  EXPECT_EQ(st.kind, ConnectingStructure::Kind::A1);
  EXPECT_EQ(st.edge, std::make_pair(0, 20));
  EXPECT_EQ(verify_structure(s.g, cs, st), "");
}

TEST(ConnectingEdge, A2ThroughSSharp) {
  // A_1 matched into B_2 and A_2 into B_1: no L-L edge
  auto s = split_clusters(10, {10, 10}, [](Split& sp, auto& e) {
    for (int i = 0; i < 10; ++i) {
      e.emplace_back(sp.A[0][i], sp.B[1][i]);
      e.emplace_back(sp.A[1][i], sp.B[0][i]);
    }
  });
  ASSERT_TRUE(validate_extremal(s.g, s.p, Rational(1, 10), Rational(1, 4), 20).ok);
  auto cs = cluster_sets(s.g, s.p, 20, Rational(1, 5));
  ASSERT_FALSE(cs.is_abundant());
  auto st = find_connecting_edge(s.g, cs);
  EXPECT_EQ(st.kind, ConnectingStructure::Kind::A2);
  EXPECT_EQ(st.i1, 1);
  EXPECT_EQ(st.i2, 0);
  EXPECT_EQ(verify_structure(s.g, cs, st), "");
}

TEST(ConnectingEdge, A3BridgingVertex) {
  // k = 20, beta = 1/8. V_1 = A_1(10) + B_1(11) + x0, V_2 = A_2(10) + B_2(11).
  // x0 sees 3 vertices of each A_i: deg(x0, L) = 6 = (1/2 - gamma)k, not in any S_sharp.
  auto s = split_clusters(
      10, {11, 11},
      [](Split& sp, auto& e) {
        int x0 = 42;
        for (int i = 0; i < 3; ++i) {
          e.emplace_back(x0, sp.A[0][i]);
          e.emplace_back(x0, sp.A[1][i]);
        }
        sp.p.clusters[0].push_back(x0);
      },
      1);
  ASSERT_TRUE(validate_extremal(s.g, s.p, Rational(1, 8), Rational(1, 4), 20).ok);
  auto cs = cluster_sets(s.g, s.p, 20, Rational(1, 5));
  ASSERT_FALSE(cs.is_abundant());
  auto st = find_connecting_edge(s.g, cs);
  EXPECT_EQ(st.kind, ConnectingStructure::Kind::A3);
  EXPECT_EQ(st.vertex, 42);
  EXPECT_EQ(verify_structure(s.g, cs, st), "");
}

TEST(ConnectingEdge, RejectsResidual) {
  auto s = deficient_a1();
  auto cs = cluster_sets(s.g, s.p, 20, Rational(1, 5));
  cs.residual_empty = false;
  EXPECT_THROW(find_connecting_edge(s.g, cs), PreconditionError);
}

TEST(StartVertex, DeficientSplitInstance) {
  auto s = deficient_a1();
  auto cs = cluster_sets(s.g, s.p, 20, Rational(1, 5));
  auto st = find_start_vertex(s.g, cs);
  EXPECT_EQ(st.i0, 0);
  EXPECT_EQ(st.vertex, 0);
  // deg(0, L^1) = 9, plus its matching partner in L^2: 10 >= k/2
  EXPECT_EQ(verify_structure(s.g, cs, st), "");
}

TEST(StartVertex, RandomDeficientCampaign) {
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed);
    int k = 16 + 4 * static_cast<int>(rng() % 3);
    int lambda = 2 + static_cast<int>(rng() % 2);
    int a = k / 2;
    std::vector<int> bs(lambda, k - a);
    auto s = split_clusters(a, bs, [&](Split& sp, auto& e) {
      // one random bijection A_i -> A_{i+1}, cyclically
      for (int i = 0; i < lambda; ++i) {
        VertexSet target = sp.A[(i + 1) % lambda];
        std::shuffle(target.begin(), target.end(), rng);
        for (int j = 0; j < a; ++j) e.emplace_back(sp.A[i][j], target[j]);
      }
      // sparse noise inside each B_i keeps B in S
      std::bernoulli_distribution coin(0.1);
      for (const auto& B : sp.B)
        for (std::size_t x = 0; x < B.size(); ++x)
          for (std::size_t y = x + 1; y < B.size(); ++y)
            if (coin(rng)) e.emplace_back(B[x], B[y]);
    });
    Rational beta(1, 4), gamma(1, 5);
    auto rep = validate_extremal(s.g, s.p, beta, Rational(1, 4), k);
    ASSERT_TRUE(rep.ok) << "seed " << seed;
    auto cs = cluster_sets(s.g, s.p, k, gamma);
    ASSERT_FALSE(cs.is_abundant());
    auto st = find_start_vertex(s.g, cs);
    EXPECT_EQ(verify_structure(s.g, cs, st), "");
    ++found;
  }
  EXPECT_EQ(found, 100);
}

TEST(Cones, EAloneReachesBound) {
  auto s = deficient_a1();
  auto cs = cluster_sets(s.g, s.p, 20, Rational(1, 5));
  auto st = deficient_cones(s.g, cs);
  EXPECT_EQ(verify_structure(s.g, cs, st), "");
  EXPECT_EQ(st.J.size(), 0);
  EXPECT_EQ(st.E.size(), 1);  // truncated: |L|+|S_heart|+|E| = k+1
}

TEST(Cones, SharedSmallVerticesGiveJ) {
  // k = 20, V_i = A_i(10) + B_i(11); three B_1 vertices also see 3 vertices of A_2
  auto s = split_clusters(10, {11, 11}, [](Split& sp, auto& e) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) e.emplace_back(sp.B[0][i], sp.A[1][j]);
  });
  ASSERT_TRUE(validate_extremal(s.g, s.p, Rational(1, 8), Rational(1, 4), 20).ok);
  auto cs = cluster_sets(s.g, s.p, 20, Rational(1, 5));
  ASSERT_FALSE(cs.is_abundant());
  auto st = deficient_cones(s.g, cs);
  EXPECT_EQ(verify_structure(s.g, cs, st), "");
  EXPECT_EQ(st.i0, 0);
  EXPECT_EQ(st.E.size(), 0);
  EXPECT_EQ(st.J.size(), 3);
}

TEST(Cones, DMatchingPath) {
  // V_1 = A_1(10) + B_1(10): each A_1 vertex gets one edge into B_2, so no B_2
  // vertex lands in S_heart^1; |L^1| + |S_heart^1| = k and d_1 = 1
  auto s = split_clusters(10, {10, 11}, [](Split& sp, auto& e) {
    for (int i = 0; i < 10; ++i) e.emplace_back(sp.A[0][i], sp.B[1][i]);
  });
  ASSERT_TRUE(validate_extremal(s.g, s.p, Rational(1, 8), Rational(1, 4), 20).ok);
  auto cs = cluster_sets(s.g, s.p, 20, Rational(1, 5));
  auto st = deficient_cones(s.g, cs);
  EXPECT_EQ(verify_structure(s.g, cs, st), "");
  EXPECT_EQ(st.i0, 0);
  EXPECT_EQ(st.J.size(), 1);
}

TEST(ClusterClaim, HoldsOnValidatedInstances) {
  int validated = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::mt19937_64 rng(seed);
    int k = 12 + static_cast<int>(rng() % 8);
    auto b = two_cliques(k, false);
    std::vector<std::pair<int, int>> e = b.g.edges();
    std::vector<std::pair<int, int>> kept;
    std::bernoulli_distribution drop(0.05), add(0.02);
    for (auto ed : e)
      if (!drop(rng)) kept.push_back(ed);
    for (int u = 0; u <= k; ++u)
      for (int v = k + 1; v < 2 * k + 2; ++v)
        if (add(rng)) kept.emplace_back(u, v);
    Graph g = build_graph(2 * k + 2, kept);
    Rational beta(1, 8);
    if (!validate_extremal(g, b.p, beta, Rational(1, 4), k).ok) continue;
    ++validated;
    for (Rational c : {Rational(1, 2), Rational(1), Rational(2)})
      EXPECT_TRUE(all_pass(check_cluster_claim(g, b.p, beta, k, c))) << "seed " << seed;
  }
  EXPECT_GT(validated, 50);
}

namespace {

RootedTree from_edges(int n, const std::vector<std::pair<int, int>>& e) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : e) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> parent(n, -2);
  parent[0] = -1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (parent[y] == -2) {
        parent[y] = x;
        q.push(y);
      }
  }
  return RootedTree(parent);
}

// Oracle: does any l-ideal semiindependent partition exist?
bool ideal_exists(const RootedTree& t, int l) {
  int n = t.n();
  for (int mask = 0; mask < (1 << n); ++mask) {
    VertexSet U1, U2;
    for (int v = 0; v < n; ++v) (mask >> v & 1 ? U2 : U1).push_back(v);
    if (is_ideal(t, U1, U2, l)) return true;
  }
  return false;
}

}  // namespace

TEST(IdealPartition, DoubleStar) {
  // centres 0 and 1, leaves 2..6 on 0 and 7..11 on 1
  std::vector<std::pair<int, int>> e{{0, 1}};
  for (int i = 2; i <= 6; ++i) e.emplace_back(0, i);
  for (int i = 7; i <= 11; ++i) e.emplace_back(1, i);
  auto t = from_edges(12, e);
  auto r = find_ideal_partition(t, 2);
  ASSERT_TRUE(r.partition.has_value()) << r.reason;
  EXPECT_EQ(r.partition->note, "(T_o, T_e)");
  EXPECT_TRUE(is_ideal(t, r.partition->U1, r.partition->U2, 2));
}

TEST(IdealPartition, PathIsImpossible) {
  std::vector<int> parent(9);
  for (int i = 0; i < 9; ++i) parent[i] = i - 1;
  auto r = find_ideal_partition(RootedTree(parent), 2);
  EXPECT_FALSE(r.partition.has_value());
  EXPECT_NE(r.reason.find("only 2 leaves"), std::string::npos) << r.reason;
}

TEST(IdealPartition, SkewedCaterpillarNeedsFlip) {
  // spine 0-1-2-3-4, three leaves on each of 1 and 3: every leaf sits at even
  // depth, so (T_o, T_e) has no leaf in T_o
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  int next = 5;
  for (int c : {1, 3})
    for (int j = 0; j < 3; ++j) e.emplace_back(c, next++);
  auto t = from_edges(next, e);
  auto r = find_ideal_partition(t, 3);
  ASSERT_TRUE(r.partition.has_value()) << r.reason;
  EXPECT_NE(r.partition->note, "(T_o, T_e)");
  EXPECT_TRUE(is_ideal(t, r.partition->U1, r.partition->U2, 3));
  EXPECT_TRUE(ideal_exists(t, 3));
}

TEST(IdealPartition, ResultsAlwaysIdealAndImpossibilityIsReal) {
  for (int order = 2; order <= 10; ++order)
    for (const auto& t : generate_trees(order, TreeGenMode::Canonical))
      for (int l = 1; l <= 3; ++l) {
        auto r = find_ideal_partition(t, l);
        if (r.partition) {
          EXPECT_TRUE(is_ideal(t, r.partition->U1, r.partition->U2, l));
        } else if (r.reason.rfind("only", 0) == 0) {
          EXPECT_FALSE(ideal_exists(t, l));
        }
      }
}

TEST(BigComponent, PathTen) {
  std::vector<int> parent(10);
  for (int i = 0; i < 10; ++i) parent[i] = i - 1;
  RootedTree t(parent);
  auto r = big_component_vertex(t, 3, 7);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->vertex, 2);  // T - 2 leaves {3..9}, order 7
  EXPECT_EQ(r->component, range(3, 7));
}

TEST(BigComponent, StarHasNone) {
  std::vector<int> parent(10, 0);
  parent[0] = -1;
  EXPECT_FALSE(big_component_vertex(RootedTree(parent), 3, 7).has_value());
}

TEST(BigComponent, FullRangeTakesFirstVertex) {
  std::vector<int> parent(10);
  for (int i = 0; i < 10; ++i) parent[i] = i - 1;
  auto r = big_component_vertex(RootedTree(parent), 1, 9);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->vertex, 0);
  EXPECT_EQ(r->component.size(), 9u);
}

TEST(BigComponent, AgreesWithBruteForce) {
  for (int order = 2; order <= 9; ++order)
    for (const auto& t : generate_trees(order, TreeGenMode::Canonical))
      for (int lo = 1; lo < order; ++lo)
        for (int hi = lo; hi < order; ++hi) {
          // oracle: remove r, flood-fill the rest
          int expect = -1;
          for (int r = 0; r < order && expect < 0; ++r) {
            std::vector<int> comp(order, -1);
            for (int s = 0; s < order; ++s) {
              if (s == r || comp[s] >= 0) continue;
              int size = 0;
              std::vector<int> stack{s};
              comp[s] = s;
              while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                ++size;
                for (int y : t.neighbors(x))
                  if (y != r && comp[y] < 0) {
                    comp[y] = s;
                    stack.push_back(y);
                  }
              }
              if (size >= lo && size <= hi) expect = r;
            }
          }
          auto got = big_component_vertex(t, lo, hi);
          EXPECT_EQ(got ? got->vertex : -1, expect);
        }
}

TEST(BigComponent, RejectsInvertedRange) {
  EXPECT_THROW(big_component_vertex(RootedTree({-1, 0}), 3, 2), InputError);
}

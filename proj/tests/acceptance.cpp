// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Tolerances are exact everywhere (integer or rational comparisons).

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "instances.hpp"
#include "lks/embed.hpp"
#include "lks/matching.hpp"
#include "lks/regularity.hpp"
#include "lks/tree.hpp"
#include "lks/tree_cut.hpp"
#include "lks/tutte.hpp"
#include "lks/verify.hpp"

using namespace lks;
using namespace lks::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first failure
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s [%d] %s | tol=exact | %s | %.1fs\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), s);
  std::fflush(stdout);
}

// ---- independent oracles ----

bool brute_contains(const Graph& host, const RootedTree& t) {
  int n = host.n();
  if (t.n() > n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto edges = t.edges();
  do {
    bool ok = true;
    for (auto [a, b] : edges)
      if (!host.has_edge(perm[a], perm[b])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool brute_universal(const Graph& host, const std::vector<RootedTree>& trees) {
  for (const auto& t : trees)
    if (!brute_contains(host, t)) return false;
  return true;
}

Graph graph_of(int n, unsigned long long mask) {
  std::vector<std::pair<int, int>> e;
  int i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++i)
      if (mask >> i & 1ULL) e.emplace_back(u, v);
  return build_graph(n, e);
}

// Every coloring of K_m, no symmetry pruning, permutation-based containment.
bool brute_ramsey(int m, int l1, int l2) {
  auto T1 = generate_trees(l1 + 1, TreeGenMode::Labeled), T2 = generate_trees(l2 + 1, TreeGenMode::Labeled);
  int E = m * (m - 1) / 2;
  unsigned long long all = (1ULL << E) - 1;
  for (unsigned long long mask = 0; mask <= all; ++mask)
    if (!brute_universal(graph_of(m, mask), T1) && !brute_universal(graph_of(m, ~mask & all), T2)) return false;
  return true;
}

int brute_nu(const Graph& g, unsigned live) {
  if (live == 0) return 0;
  int v = std::countr_zero(live);
  unsigned rest = live & ~(1u << v);
  int best = brute_nu(g, rest);
  for (int w : g.neighbors(v))
    if (rest >> w & 1u) best = std::max(best, 1 + brute_nu(g, rest & ~(1u << w)));
  return best;
}

bool brute_factor_critical(const Graph& g) {
  int n = g.n();
  if (n % 2 == 0) return false;
  unsigned all = (1u << n) - 1;
  for (int v = 0; v < n; ++v)
    if (2 * brute_nu(g, all & ~(1u << v)) != n - 1) return false;
  return true;
}

// ---- criteria ----

Outcome ramsey_reproduction() {
  Outcome o;
  const int expect[4][3] = {{1, 1, 2}, {2, 2, 3}, {2, 3, 5}, {3, 3, 6}};
  std::ostringstream d;
  for (const auto& row : expect) {
    int l1 = row[0], l2 = row[1], R = row[2];
    auto r = ramsey_number(l1, l2, 8);
    d << "R(" << l1 << "," << l2 << ")=" << r.value << " ";
    if (r.value != R) o.fail("R(" + std::to_string(l1) + "," + std::to_string(l2) + ") = " + std::to_string(r.value));
    bool odd = l1 % 2 || l2 % 2;
    if (odd && r.value != l1 + l2) o.fail("odd pair differs from l1+l2");
    // second route: unpruned enumeration with permutation containment
    if (brute_ramsey(R - 1, l1, l2)) o.fail("brute force: K_" + std::to_string(R - 1) + " already forces");
    if (!brute_ramsey(R, l1, l2)) o.fail("brute force: K_" + std::to_string(R) + " does not force");
    // lower bounds: enumeration witness and the circulant construction
    auto T1 = generate_trees(l1 + 1, TreeGenMode::Labeled), T2 = generate_trees(l2 + 1, TreeGenMode::Labeled);
    if (r.witness.m != R - 1 || brute_universal(r.witness.red_graph(), T1) ||
        brute_universal(r.witness.blue_graph(), T2))
      o.fail("witness coloring is not a counterexample");
    const auto& c = r.construction;
    if (c.m != R - 1 || c.red_graph().max_degree() >= l1 || c.blue_graph().max_degree() >= l2)
      o.fail("construction is not a star-free coloring of K_{R-1}");
  }
  if (o.pass) o.detail = d.str() + "(enumeration + unpruned brute force + verified constructions)";
  return o;
}

Outcome lks_small() {
  Outcome o;
  std::ostringstream d;
  long long graphs = 0, checks = 0;
  for (int n = 1; n <= 6; ++n) {
    auto r = lks_verify(n);
    graphs += r.graphs;
    checks += r.checks;
    if (!r.counterexamples.empty())
      o.fail("n=" + std::to_string(n) + ": " + std::to_string(r.counterexamples.size()) + " counterexamples");
    if (r.graphs != 1LL << (n * (n - 1) / 2)) o.fail("n=" + std::to_string(n) + ": wrong graph count");
  }
  d << graphs << " labeled graphs n<=6, " << checks << " (G,k,T) checks, 0 counterexamples";
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome tree_facts() {
  Outcome o;
  long long trees = 0, semis = 0, cuts = 0, fulls = 0;
  for (int n = 2; n <= 8; ++n) {
    for_each_tree(n, TreeGenMode::Labeled, [&](const RootedTree& t) {
      if (!o.pass) return;
      ++trees;
      std::vector<unsigned> adj(n, 0);
      for (auto [a, b] : t.edges()) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
      }
      unsigned leafmask = 0;
      int leaves = 0, deg3 = 0;
      for (int v = 0; v < n; ++v) {
        if (t.degree(v) == 1) {
          leafmask |= 1u << v;
          ++leaves;
        }
        deg3 += t.degree(v) >= 3;
      }
      if (deg3 > leaves - 2) o.fail("degree-3 bound");

      auto cs = color_stats(t);
      unsigned Te = 0;
      for (int v : cs.Te) Te |= 1u << v;
      unsigned all = (1u << n) - 1, To = all & ~Te;
      int disc = discrepancy(t).disc;
      if (cs.gap > disc) o.fail("gap > disc");

      // components of T - r
      std::vector<std::vector<unsigned>> comps(n);
      for (int r = 0; r < n; ++r) {
        unsigned left = all & ~(1u << r);
        while (left) {
          unsigned c = 1u << std::countr_zero(left), grow = c;
          while (grow) {
            unsigned nb = 0;
            for (unsigned g = grow; g; g &= g - 1) nb |= adj[std::countr_zero(g)];
            grow = nb & left & ~c;
            c |= grow;
          }
          comps[r].push_back(c);
          left &= ~c;
        }
      }
      auto for_each_cut = [&](const std::function<void(unsigned)>& fn) {
        for (int r = 0; r < n; ++r) {
          int q = static_cast<int>(comps[r].size());
          for (unsigned s = 1; s < (1u << q); ++s) {
            unsigned K = 0;
            for (int i = 0; i < q; ++i)
              if (s >> i & 1u) K |= comps[r][i];
            fn(K);
          }
        }
      };
      // cut lemma, colour classes
      for_each_cut([&](unsigned K) {
        ++cuts;
        if (std::abs(std::popcount(K & Te) - std::popcount(K & To)) > disc + 1) o.fail("cut lemma (Te/To)");
      });

      // every semiindependent partition
      int best = -1;
      for (unsigned U2 = 0; U2 <= all; ++U2) {
        int u2 = std::popcount(U2), u1 = n - u2;
        if (u2 < u1) continue;
        bool ind = true;
        for (unsigned g = U2; g && ind; g &= g - 1) ind = (adj[std::countr_zero(g)] & U2) == 0;
        if (!ind) continue;
        ++semis;
        unsigned U1 = all & ~U2;
        best = std::max(best, u2 - u1);
        if (std::popcount(U2 & leafmask) < u2 - u1 + 1) o.fail("many-leaves fact");
        for_each_cut([&](unsigned K) {
          if (std::popcount(K & U2) - std::popcount(K & U1) > disc + 1) o.fail("cut lemma (U1/U2)");
        });
      }
      if (best != disc) o.fail("discrepancy differs from the enumerated maximum");

      // full-subtrees, both parts
      for (int m0 = 1; m0 <= n; ++m0) {
        auto f = full_subtree(t, FullSubtreeMode::ByOrder, m0);
        ++fulls;
        if (!is_full_subtree(t, f) || 2 * f.order < m0 || f.order > m0) o.fail("full-subtree by order");
      }
      int rl = static_cast<int>(t.rooted_leaves().size());
      for (int l0 = 1; l0 <= rl; ++l0) {
        auto f = full_subtree(t, FullSubtreeMode::ByLeaves, l0);
        ++fulls;
        if (!is_full_subtree(t, f) || 2 * f.leaves < l0 || f.leaves > l0) o.fail("full-subtree by leaves");
      }
    });
  }
  if (o.pass) {
    std::ostringstream d;
    d << trees << " labeled trees (2..8): " << semis << " semiindependent partitions, " << cuts
      << " cut sets, " << fulls << " full-subtrees, gap<=disc, degree-3 bound";
    o.detail = d.str();
  }
  return o;
}

Outcome fine_suite() {
  Outcome o;
  long long done = 0;
  for (int n = 2; n <= 8; ++n) {
    for_each_tree(n, TreeGenMode::Labeled, [&](const RootedTree& base) {
      if (!o.pass) return;
      for (int r = 0; r < n; ++r) {
        auto t = base.rerooted(r);
        for (int ell = 1; ell <= n - 1; ++ell) {
          for (bool sw : {false, true}) {
            auto fp = sw ? switched_fine_partition(t, ell) : fine_partition(t, ell);
            auto rep = validate_fine_partition(t, fp, n - 1);
            ++done;
            for (const auto& b : rep.bullets)
              if (!b.pass) {
                std::ostringstream d;
                d << (sw ? "switched" : "plain") << " n=" << n << " root=" << r << " ell=" << ell << ": " << b.name
                  << " " << b.detail;
                o.fail(d.str());
              }
          }
        }
      }
    });
  }
  if (o.pass) o.detail = std::to_string(done) + " partitions (both variants, labeled trees 2..8, all roots, ell in [1,n-1])";
  return o;
}

Outcome matching_suite() {
  Outcome o;
  std::mt19937_64 rng(2024);
  // Gallai-Edmonds
  int ge_runs = 0;
  for (; ge_runs < 1000; ++ge_runs) {
    int n = 1 + static_cast<int>(rng() % 12);
    std::bernoulli_distribution coin(0.05 + 0.05 * (ge_runs % 12));
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    Graph g = build_graph(n, e);
    auto ge = gallai_edmonds(g);
    auto err = check_ge(g, ge);
    if (!err.empty()) o.fail("check_ge: " + err);
    if (ge.M.size() != static_cast<int>(ge.Q.size())) o.fail("Q not matched into distinct components");
    for (const auto& c : ge.components)
      if (!brute_factor_critical(g.induced(c.vertices))) o.fail("component not factor-critical (brute force)");
    if (2 * brute_nu(g, n == 0 ? 0u : (1u << n) - 1) != 2 * ge.maximum.size()) o.fail("matching not maximum");
  }
  // Hall cover under verified preconditions
  int hall_runs = 0;
  while (hall_runs < 1000) {
    int a = 1 + static_cast<int>(rng() % 8), b = a + static_cast<int>(rng() % 5);
    Graph g(a + b);
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < a; ++i)
      for (int j = a; j < a + b; ++j)
        if (coin(rng)) g.add_edge(i, j);
    for (int v = 0; v < a + b; ++v)
      for (int guard = 0; 2 * g.degree(v) < a && guard < 1000; ++guard)
        g.add_edge(v, v < a ? a + static_cast<int>(rng() % b) : static_cast<int>(rng() % a));
    bool pre = true;
    for (int v = 0; v < a + b; ++v) pre = pre && 2 * g.degree(v) >= a;
    if (!pre) continue;
    VertexSet W1(a), W2(b);
    std::iota(W1.begin(), W1.end(), 0);
    std::iota(W2.begin(), W2.end(), a);
    auto m = hall_cover_matching(g, W1, W2);
    if (m.size() != a || !is_matching(g, m)) o.fail("hall_cover_matching failed under its preconditions");
    ++hall_runs;
  }
  // weight split vs the exhaustive 2^|I| oracle
  int ws_runs = 0, fallback = 0;
  while (ws_runs < 500) {
    int n = 1 + static_cast<int>(rng() % 10);
    Rational delta(1 + static_cast<long long>(rng() % 4));
    std::vector<Rational> al(n), be(n);
    Rational sa, sb;
    for (int i = 0; i < n; ++i) {
      al[i] = Rational(1 + static_cast<long long>(rng() % 12), 12) * delta;
      be[i] = Rational(1 + static_cast<long long>(rng() % 12), 12) * delta;
      sa += al[i];
      sb += be[i];
    }
    Rational t(static_cast<long long>(rng() % 11), 10);
    Rational a = t * sa, b = (Rational(1) - t) * sb;
    if (rng() % 3 == 0) a = a * Rational(1, 2);
    if (a / sa + b / sb > Rational(1)) continue;
    auto w = weight_split(al, be, a, b, delta);
    bool valid = weight_split_valid(al, be, a, b, delta, w);
    bool exists = false;
    for (unsigned msk = 0; msk < (1u << n) && !exists; ++msk) {
      Rational xa, xb;
      for (int i = 0; i < n; ++i) (msk >> i & 1 ? xb : xa) += (msk >> i & 1 ? be[i] : al[i]);
      exists = xa > a - delta && xb >= b;
    }
    if (valid != exists) o.fail("weight_split disagrees with the exhaustive oracle");
    fallback += w.used_fallback;
    ++ws_runs;
  }
  if (o.pass) {
    std::ostringstream d;
    d << ge_runs << " Gallai-Edmonds (n<=12, brute factor-criticality), " << hall_runs << " Hall covers, " << ws_runs
      << " weight splits (fallback used " << fallback << "x)";
    o.detail = d.str();
  }
  return o;
}

Outcome tutte_suite() {
  Outcome o;
  int runs = 0;
  std::map<std::string, int> branches;
  const TutteFamily fams[] = {TutteFamily::Generic, TutteFamily::LargeSideSeparator, TutteFamily::HubSeparator,
                              TutteFamily::DenseL};
  for (int f = 0; f < 4; ++f)
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      int N = 100 + static_cast<int>((seed * 37 + 11 * f) % 201);
      auto in = make_tutte_instance(fams[f], N, 1000 * f + seed);
      check_tutte_preconditions(in.h, in.L, in.sigma, in.K);
      auto ts = tutte_structure(in.h, in.L, in.sigma, in.K);
      for (const auto& b : check_tutte(in.h, in.L, in.sigma, in.K, ts))
        if (!b.pass) o.fail("N=" + std::to_string(N) + ": " + b.name + " " + b.detail);
      auto inL = mask_of(in.h.n(), in.L);
      for (auto [a, b] : ts.M.edges)
        if (!inL[a] && !inL[b]) o.fail("an edge of M misses L");
      ++branches[ts.branch];
      ++runs;
    }
  if (o.pass) {
    std::ostringstream d;
    d << runs << " instances, N in [100,300], preconditions checked; branches:";
    for (const auto& [b, c] : branches) d << " " << b << "=" << c;
    o.detail = d.str();
  }
  return o;
}

void fill_contract(const FillInstance& in, Outcome& o, const std::string& tag) {
  const auto& h = in.host;
  auto out = fill_regular_pair(h.g, h.X, h.Y, h.Z, in.F, in.r, in.U, in.p);
  if (!out.found()) {
    o.fail(tag + ": not found: " + out.detail);
    return;
  }
  auto chk = validate_embedding(h.g, in.F, out.embedding.map);
  if (!chk.ok) o.fail(tag + ": " + chk.violation);
  for (const auto& b : check_fill_postconditions(h.g, h.X, h.Y, h.Z, in.F, in.r, in.U, in.p, out.embedding.map))
    if (!b.pass) o.fail(tag + ": " + b.name + " " + b.detail);
}

bool certified_regular(const Graph& g, const VertexSet& A, const VertexSet& B, const Rational& eps) {
  RegularityOptions ro;
  ro.mode = RegularityMode::Auto;
  auto r = regular_pair_test(g, A, B, eps, ro);
  return r.certified && r.verdict == RegularityVerdict::Regular;
}

Outcome regular_pair_suite() {
  Outcome o;
  std::ostringstream d;
  // Embedding into one regular pair
  int pair_runs = 0;
  for (std::uint64_t seed = 1; pair_runs < 100; ++seed) {
    auto in = make_pair_instance(seed);
    const auto& g = in.host.g;
    if (!certified_regular(g, in.host.X, in.host.Y, in.eps)) o.fail("pair not certified regular");
    auto out = embed_in_regular_pair(g, in.host.X, in.host.Y, in.P, in.Q, in.Pp, in.Qp, in.t, in.eps, in.d, in.opt);
    ++pair_runs;
    if (!out.found()) {
      o.fail("pair seed " + std::to_string(seed) + ": " + out.detail);
      continue;
    }
    if (!validate_embedding(g, in.t, out.embedding.map).ok) o.fail("pair: invalid embedding");
    auto mP = mask_of(g.n(), in.P), mQ = mask_of(g.n(), in.Q), mPp = mask_of(g.n(), in.Pp), mQp = mask_of(g.n(), in.Qp);
    int root = out.embedding.map[in.t.root()];
    if (!mPp[root] && !mQp[root]) o.fail("pair: root outside P' u Q'");
    if (in.opt.root_side == RootSide::P && !mPp[root]) o.fail("pair: root not in P'");
    if (in.opt.root_side == RootSide::Q && !mQp[root]) o.fail("pair: root not in Q'");
    for (int x = 0; x < in.t.n(); ++x) {
      int v = out.embedding.map[x];
      if (!mP[v] && !mQ[v]) o.fail("pair: image outside P u Q");
      if (x != in.t.root() && ((in.opt.avoid_P_prime && mPp[v]) || (in.opt.avoid_Q_prime && mQp[v])))
        o.fail("pair: non-root image in an avoided set");
    }
  }
  d << "pair " << pair_runs << "/100";
  // fill-up modes 1 and 2 on complete/empty Z links (all three pairs certified)
  for (int mode : {1, 2}) {
    int runs = 0, skipped = 0;
    for (std::uint64_t seed = 1; runs < 100; ++seed) {
      auto in = make_fill_instance_small(mode, 7919 * mode + seed);
      if (!in) {
        ++skipped;
        continue;
      }
      const auto& h = in->host;
      if (!certified_regular(h.g, h.X, h.Y, in->p.eps) || !certified_regular(h.g, h.Z, h.X, in->p.eps) ||
          !certified_regular(h.g, h.Z, h.Y, in->p.eps))
        o.fail("mode " + std::to_string(mode) + ": a pair is not certified regular");
      fill_contract(*in, o, "mode " + std::to_string(mode) + " seed " + std::to_string(seed));
      ++runs;
    }
    d << ", mode" << mode << " " << runs << "/100 (" << skipped << " draws missed a hypothesis)";
  }
  // mode 3: s = 1200, 10 hosts x 10 forests
  int m3 = 0, m3_missing = 0;
  const ZLink kinds[] = {ZLink::Empty, ZLink::Circulant, ZLink::Complete};
  for (int hi = 0; hi < 10; ++hi) {
    auto host = make_mode3_host(kinds[hi % 3], 500 + hi);
    if (!certified_regular(host.g, host.X, host.Y, mode3_params().eps)) o.fail("mode 3: (X,Y) not certified");
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto in = make_mode3_instance(host, 100 * hi + seed);
      if (!in) {
        ++m3_missing;
        continue;
      }
      fill_contract(*in, o, "mode 3 host " + std::to_string(hi) + " seed " + std::to_string(seed));
      ++m3;
    }
  }
  if (m3 < 100) o.fail("mode 3: only " + std::to_string(m3) + " instances met the hypotheses");
  d << ", mode3 " << m3 << "/100 (Z-pair regularity uncertified: circulant Z links at eps=1/1200 are not certified; "
    << "(X,Y) certified, every other hypothesis checked)";
  // half-graph 8+8
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 8; ++i)
    for (int j = i; j < 8; ++j) e.emplace_back(i, 8 + j);
  Graph half = build_graph(16, e);
  VertexSet A(8), B(8);
  std::iota(A.begin(), A.end(), 0);
  std::iota(B.begin(), B.end(), 8);
  RegularityOptions ex;
  ex.mode = RegularityMode::Exact;
  auto hr = regular_pair_test(half, A, B, Rational(1, 10), ex);
  if (hr.verdict != RegularityVerdict::Irregular || !hr.certified || !witness_valid(half, A, B, hr))
    o.fail("half-graph 8+8 not reported irregular by the exact tester");
  d << ", half-graph 8+8 irregular at eps=1/10 (exact, witness re-checked)";
  if (o.pass) o.detail = d.str();
  else o.detail += " [" + d.str() + "]";
  return o;
}

Outcome dispatcher_suite() {
  Outcome o;
  long long pairs = 0;
  std::map<std::string, long long> by;
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::vector<RootedTree>> trees(n);
    for (int k = 1; k < n; ++k) trees[k] = generate_trees(k + 1, TreeGenMode::Canonical);
    int E = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << E); ++mask) {
      Graph g = graph_of(n, mask);
      for (int k = 1; k < n; ++k) {
        int large = 0;
        for (int v = 0; v < n; ++v) large += g.degree(v) >= k;
        if (2 * large < n) continue;
        for (const auto& t : trees[k]) {
          DispatchOptions opt;
          opt.threads = 1;
          auto out = embed_tree(g, t, k, opt);
          ++pairs;
          if (!out.found()) {
            o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + to_string(out.status));
            continue;
          }
          if (!validate_embedding(g, t, out.embedding.map).ok) o.fail("invalid embedding returned");
          ++by[out.strategy];
        }
      }
    }
  }
  if (o.pass) {
    std::ostringstream d;
    d << pairs << " LKS (G,k,T) triples n<=6 (canonical T), all Found; strategies:";
    for (const auto& [s, c] : by) d << " " << s << "=" << c;
    o.detail = d.str();
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "Ramsey reproduction R(1,1)=2 R(2,2)=3 R(2,3)=5 R(3,3)=6", ramsey_reproduction);
  criterion(2, "LKS on all labeled graphs n<=6, every k", lks_small);
  criterion(3, "Tree-structure facts on all labeled trees n<=8", tree_facts);
  criterion(4, "Fine partitions, both variants, trees n<=8", fine_suite);
  criterion(5, "Matching theory suite", matching_suite);
  criterion(6, "Tutte-type structure on weighted instances", tutte_suite);
  criterion(7, "Regular-pair embedders and half-graph irregularity", regular_pair_suite);
  criterion(8, "Dispatcher completeness n<=6", dispatcher_suite);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

#include "lks/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lks {

namespace {

Rational R(long long v) { return Rational(v); }
long long sz(const VertexSet& s) { return static_cast<long long>(s.size()); }

// owner[v] = cluster index, lambda for V~.
std::vector<int> check_partition(const Graph& g, const ExtremalPartition& p, const char* who) {
  int n = g.n();
  int lambda = static_cast<int>(p.clusters.size());
  std::vector<int> owner(n, -1);
  auto claim = [&](int v, int id) {
    if (v < 0 || v >= n) throw InputError(std::string(who) + ": vertex " + std::to_string(v) + " out of range");
    if (owner[v] >= 0) throw InputError(std::string(who) + ": vertex " + std::to_string(v) + " listed twice");
    owner[v] = id;
  };
  for (int i = 0; i < lambda; ++i)
    for (int v : p.clusters[i]) claim(v, i);
  for (int v : p.residual) claim(v, lambda);
  for (int v = 0; v < n; ++v)
    if (owner[v] < 0) throw InputError(std::string(who) + ": vertex " + std::to_string(v) + " not covered");
  return owner;
}

long long outgoing(const Graph& g, const VertexSet& A) {
  auto m = mask_of(g.n(), A);
  long long e = 0;
  for (int v : A) e += g.degree(v) - degree_into(g, v, m);
  return e;
}

// x > coef * sqrt(beta), coef >= 0
bool above_sqrt(long long x, const Rational& coef, const Rational& beta) {
  return x > 0 && R(x) * R(x) > coef * coef * beta;
}

void require_deficient_setup(const ClusterSets& cs, const char* who) {
  if (!cs.residual_empty) throw PreconditionError(std::string(who) + ": V~ is not empty");
  if (cs.is_abundant())
    throw PreconditionError(std::string(who) + ": partition is Abundant (|L^" + std::to_string(cs.abundant[0] + 1) +
                            "| >= (k+1)/2)");
  auto ov = overlapping_L(cs);
  if (!ov.empty())
    throw PreconditionError(std::string(who) + ": L^" + std::to_string(ov[0].first + 1) + " and L^" +
                            std::to_string(ov[0].second + 1) + " intersect");
  long long covered = 0;
  for (const auto& li : cs.Li) covered += sz(li);
  if (covered != sz(cs.L)) throw PreconditionError(std::string(who) + ": the sets L^i do not cover L");
}

Matching truncated(Matching m, long long keep) {
  if (keep < 0) keep = 0;
  if (m.size() > keep) m.edges.resize(static_cast<std::size_t>(keep));
  return m;
}

// Bipartite subgraph of g between A and B keeping, for each a in A, only the
// first `per` edges into `allowed` (by neighbour id).
Graph black_subgraph(const Graph& g, const VertexSet& A, const std::vector<char>& allowed, long long per) {
  Graph h(g.n());
  for (int a : A) {
    long long used = 0;
    for (int w : g.neighbors(a)) {
      if (used >= per) break;
      if (!allowed[w]) continue;
      h.add_edge(a, w);
      ++used;
    }
  }
  return h;
}

}  // namespace

ExtremalPartition parse_partition(const std::string& text) {
  ExtremalPartition p;
  std::istringstream in(text);
  std::string line;
  bool residual_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    bool residual = line[first] == '~';
    if (residual_seen) throw InputError("partition line " + std::to_string(lineno) + ": content after the ~ line");
    std::istringstream ls(residual ? line.substr(first + 1) : line);
    VertexSet s;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        s.push_back(v);
      } catch (const std::exception&) {
        throw InputError("partition line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
      }
    }
    if (residual) {
      p.residual = normalized(s);
      residual_seen = true;
    } else {
      if (s.empty()) throw InputError("partition line " + std::to_string(lineno) + ": empty cluster");
      p.clusters.push_back(normalized(s));
    }
  }
  return p;
}

ExtremalReport validate_extremal(const Graph& g, const ExtremalPartition& p, const Rational& beta,
                                 const Rational& sigma, int k) {
  check_partition(g, p, "validate_extremal");
  auto cls = classify_lks(g, k);
  ExtremalReport rep;
  rep.lambda = static_cast<int>(p.clusters.size());
  rep.theta = ci(Rational(g.n(), k));
  Rational K = R(k);
  Rational bk2 = beta * K * K;

  rep.bullets.push_back({"lambda >= 1", rep.lambda >= 1, "lambda=" + std::to_string(rep.lambda)});

  BulletResult size{"(1-beta)k < |V_i| < (1+beta)k", true, ""};
  BulletResult cut{"e(V_i, V-V_i) < beta k^2 and e(V~, V-V~) < beta k^2", true, ""};
  BulletResult large{"(1/2-beta)k < |V_i n L|", true, ""};
  for (int i = 0; i < rep.lambda; ++i) {
    const auto& Vi = p.clusters[i];
    Rational s = R(sz(Vi));
    if (size.pass && !((R(1) - beta) * K < s && s < (R(1) + beta) * K)) {
      size.pass = false;
      size.detail = "|V_" + std::to_string(i + 1) + "|=" + std::to_string(Vi.size());
    }
    long long e = outgoing(g, Vi);
    if (cut.pass && !(R(e) < bk2)) {
      cut.pass = false;
      cut.detail = "e(V_" + std::to_string(i + 1) + ", rest)=" + std::to_string(e) + " vs " + bk2.str();
    }
    long long l = std::count_if(Vi.begin(), Vi.end(), [&](int v) { return cls.large[v] != 0; });
    if (large.pass && !((Rational(1, 2) - beta) * K < R(l))) {
      large.pass = false;
      large.detail = "|V_" + std::to_string(i + 1) + " n L|=" + std::to_string(l);
    }
  }
  long long rs = sz(p.residual);
  if (rs > 0) {
    long long e = outgoing(g, p.residual);
    if (cut.pass && !(R(e) < bk2)) {
      cut.pass = false;
      cut.detail = "e(V~, rest)=" + std::to_string(e) + " vs " + bk2.str();
    }
  }
  rep.bullets.push_back(size);
  rep.bullets.push_back({"V~ empty or |V~| > sigma k", rs == 0 || R(rs) > sigma * K, "|V~|=" + std::to_string(rs)});
  rep.bullets.push_back(cut);
  rep.bullets.push_back(large);
  long long rl = std::count_if(p.residual.begin(), p.residual.end(), [&](int v) { return cls.large[v] != 0; });
  rep.bullets.push_back({"|V~ n L| <= (1/2-sigma)|V~|", R(rl) <= (Rational(1, 2) - sigma) * R(rs),
                         "|V~ n L|=" + std::to_string(rl)});
  rep.ok = std::all_of(rep.bullets.begin(), rep.bullets.end(), [](const BulletResult& b) { return b.pass; });
  return rep;
}

std::vector<BulletResult> check_cluster_claim(const Graph& g, const ExtremalPartition& p, const Rational& beta, int k,
                                              const Rational& c) {
  check_partition(g, p, "check_cluster_claim");
  if (c <= R(0)) throw InputError("check_cluster_claim: c must be positive");
  auto cls = classify_lks(g, k);
  Rational K = R(k);
  BulletResult b1{"#{v in V_i n L : deg(v,V_i) < k - c sqrt(beta) k} <= sqrt(beta) k / c", true, ""};
  BulletResult b2{"#{v in V_i n S : deg(v,V_i n L) < |V_i n L| - c sqrt(beta) k} <= 2 sqrt(beta) k / c", true, ""};
  for (std::size_t i = 0; i < p.clusters.size(); ++i) {
    const auto& Vi = p.clusters[i];
    VertexSet li;
    for (int v : Vi)
      if (cls.large[v]) li.push_back(v);
    auto mV = mask_of(g.n(), Vi), mL = mask_of(g.n(), li);
    long long bad_l = 0, bad_s = 0;
    for (int v : Vi) {
      if (cls.large[v]) {
        // deg < k - c sqrt(beta) k  <=>  c k sqrt(beta) < k - deg
        long long slack = k - degree_into(g, v, mV);
        if (above_sqrt(slack, c * K, beta)) ++bad_l;
      } else {
        long long slack = sz(li) - degree_into(g, v, mL);
        if (above_sqrt(slack, c * K, beta)) ++bad_s;
      }
    }
    // count <= m sqrt(beta) k / c  <=>  (c count)^2 <= m^2 beta k^2
    auto within = [&](long long count, long long m) {
      Rational lhs = c * R(count);
      return lhs * lhs <= R(m * m) * beta * K * K;
    };
    if (b1.pass && !within(bad_l, 1)) {
      b1.pass = false;
      b1.detail = "cluster " + std::to_string(i + 1) + ": " + std::to_string(bad_l) + " exceptional L-vertices";
    }
    if (b2.pass && !within(bad_s, 2)) {
      b2.pass = false;
      b2.detail = "cluster " + std::to_string(i + 1) + ": " + std::to_string(bad_s) + " exceptional S-vertices";
    }
  }
  return {b1, b2};
}

ClusterSets cluster_sets(const Graph& g, const ExtremalPartition& p, int k, const Rational& gamma) {
  check_partition(g, p, "cluster_sets");
  auto cls = classify_lks(g, k);
  ClusterSets cs;
  cs.k = k;
  cs.gamma = gamma;
  cs.theta = ci(Rational(g.n(), k));
  cs.L = cls.L;
  cs.S = cls.S;
  cs.residual_empty = p.residual.empty();
  cs.clusters = p.clusters;
  int lambda = static_cast<int>(p.clusters.size());
  Rational K = R(k);
  Rational fifth = K / R(5 * cs.theta), third = K / R(3 * cs.theta);
  for (int i = 0; i < lambda; ++i) {
    auto mV = mask_of(g.n(), p.clusters[i]);
    VertexSet li;
    for (int u : cls.L)
      if (R(degree_into(g, u, mV)) > (R(1) - gamma / R(2)) * K) li.push_back(u);
    auto mL = mask_of(g.n(), li);
    VertexSet dia, sharp, heart, cone, x;
    for (int v : p.clusters[i]) {
      int d = degree_into(g, v, mL);
      if (!cls.large[v] && R(d) > R(sz(li)) - gamma * K / R(2)) dia.push_back(v);
      if (R(d) > fifth) x.push_back(v);
    }
    for (int u : cls.S) {
      Rational d = R(degree_into(g, u, mL));
      if (d > (Rational(1, 2) - gamma) * K) sharp.push_back(u);
      if (d > fifth) heart.push_back(u);
      if (d >= third) cone.push_back(u);
    }
    if (2 * sz(li) >= k + 1) cs.abundant.push_back(i);
    cs.Li.push_back(std::move(li));
    cs.S_diamond.push_back(std::move(dia));
    cs.S_sharp.push_back(std::move(sharp));
    cs.S_heart.push_back(std::move(heart));
    cs.S_cone.push_back(std::move(cone));
    cs.X.push_back(std::move(x));
  }
  return cs;
}

std::vector<std::pair<int, int>> overlapping_L(const ClusterSets& cs) {
  std::vector<std::pair<int, int>> out;
  int lambda = static_cast<int>(cs.Li.size());
  for (int i = 0; i < lambda; ++i)
    for (int j = i + 1; j < lambda; ++j) {
      VertexSet both;
      std::set_intersection(cs.Li[i].begin(), cs.Li[i].end(), cs.Li[j].begin(), cs.Li[j].end(),
                            std::back_inserter(both));
      if (!both.empty()) out.emplace_back(i, j);
    }
  return out;
}

std::string to_string(ConnectingStructure::Kind k) {
  using K = ConnectingStructure::Kind;
  switch (k) {
    case K::A1:
      return "A1-LL-edge";
    case K::A2:
      return "A2-LSsharp-edge";
    case K::A3:
      return "A3-bridging-vertex";
    case K::StartVertex:
      return "start-vertex";
    case K::Cones:
      return "cones";
    case K::IdealPartition:
      return "ideal-partition";
    case K::BigComponent:
      return "big-component";
  }
  return "?";
}

std::string verify_structure(const Graph& g, const ClusterSets& cs, const ConnectingStructure& s) {
  using K = ConnectingStructure::Kind;
  int n = g.n();
  int lambda = static_cast<int>(cs.Li.size());
  auto in = [](const VertexSet& set, int v) { return std::binary_search(set.begin(), set.end(), v); };
  auto idx_ok = [&](int i) { return i >= 0 && i < lambda; };
  Rational kk = R(cs.k);
  switch (s.kind) {
    case K::A1:
    case K::A2: {
      auto [x, y] = s.edge;
      if (!idx_ok(s.i1) || !idx_ok(s.i2) || s.i1 == s.i2) return "indices must be distinct clusters";
      if (x < 0 || x >= n || y < 0 || y >= n || !g.has_edge(x, y)) return "not an edge of G";
      if (!in(cs.Li[s.i1], x)) return "first endpoint not in L^i1";
      if (s.kind == K::A1 && !in(cs.Li[s.i2], y)) return "second endpoint not in L^i2";
      if (s.kind == K::A2) {
        if (std::binary_search(cs.L.begin(), cs.L.end(), y)) return "second endpoint not in S";
        auto mL = mask_of(n, cs.Li[s.i2]);
        if (!(R(degree_into(g, y, mL)) > (Rational(1, 2) - cs.gamma) * kk)) return "second endpoint not in S^i2_sharp";
      }
      return "";
    }
    case K::A3: {
      int x0 = s.vertex;
      if (x0 < 0 || x0 >= n || std::binary_search(cs.L.begin(), cs.L.end(), x0)) return "x0 not in S";
      auto mL = mask_of(n, cs.L);
      if (!(R(degree_into(g, x0, mL)) >= (Rational(1, 2) - cs.gamma) * kk)) return "deg(x0, L) < (1/2-gamma)k";
      if (!idx_ok(s.i1) || !idx_ok(s.i2) || s.i1 == s.i2) return "indices must be distinct clusters";
      for (int i : {s.i1, s.i2})
        if (degree_into(g, x0, mask_of(n, cs.Li[i])) < 1) return "x0 has no neighbour in L^" + std::to_string(i + 1);
      return "";
    }
    case K::StartVertex: {
      if (!idx_ok(s.i0)) return "bad index i0";
      if (!in(cs.Li[s.i0], s.vertex)) return "v not in L^i0";
      VertexSet others;
      for (int j = 0; j < lambda; ++j)
        if (j != s.i0) {
          others.insert(others.end(), cs.Li[j].begin(), cs.Li[j].end());
          others.insert(others.end(), cs.S_cone[j].begin(), cs.S_cone[j].end());
        }
      others = normalized(others);
      long long total = degree_into(g, s.vertex, mask_of(n, cs.Li[s.i0])) + degree_into(g, s.vertex, mask_of(n, others));
      if (2 * total < cs.k) return "deg(v,L^i0) + deg(v, U_j (L^j u S^j)) < k/2";
      return "";
    }
    case K::Cones: {
      if (!idx_ok(s.i0)) return "bad index i0";
      const auto& Li = cs.Li[s.i0];
      if (!is_matching(g, s.E) || !is_matching(g, s.J)) return "E or J is not a matching of G";
      for (auto [a, b] : s.E.edges) {
        bool ai = in(Li, a), bi = in(Li, b);
        int other = ai ? b : a;
        if (ai == bi || !std::binary_search(cs.L.begin(), cs.L.end(), other))
          return "E edge " + std::to_string(a) + "-" + std::to_string(b) + " is not L^i0 <-> L - L^i0";
      }
      VertexSet heart_others;
      for (int j = 0; j < lambda; ++j)
        if (j != s.i0) heart_others.insert(heart_others.end(), cs.S_heart[j].begin(), cs.S_heart[j].end());
      heart_others = normalized(heart_others);
      for (auto [a, b] : s.J.edges) {
        bool ai = in(Li, a);
        int other = ai ? b : a;
        if (!ai && !in(Li, b)) return "J edge misses L^i0";
        if (std::binary_search(cs.L.begin(), cs.L.end(), other)) return "J edge does not end in S";
        if (!in(heart_others, other)) return "J S-end " + std::to_string(other) + " has deg <= k/(5 theta) into every other L^j";
      }
      auto ve = s.E.vertices(), vj = s.J.vertices();
      VertexSet both;
      std::set_intersection(ve.begin(), ve.end(), vj.begin(), vj.end(), std::back_inserter(both));
      if (!both.empty()) return "E and J share vertex " + std::to_string(both[0]);
      if (2 * (sz(Li) + s.E.size() + s.J.size()) < cs.k + 1) return "|L^i0| + |E| + |J| < (k+1)/2";
      return "";
    }
    default:
      return "not a cluster structure";
  }
}

ConnectingStructure find_connecting_edge(const Graph& g, const ClusterSets& cs) {
  require_deficient_setup(cs, "find_connecting_edge");
  int n = g.n();
  int lambda = static_cast<int>(cs.Li.size());
  std::vector<int> lowner(n, -1);
  for (int i = 0; i < lambda; ++i)
    for (int v : cs.Li[i]) lowner[v] = i;
  using K = ConnectingStructure::Kind;
  auto finish = [&](ConnectingStructure s) {
    auto bad = verify_structure(g, cs, s);
    if (!bad.empty()) throw InternalError("find_connecting_edge: " + bad);
    return s;
  };
  // A1
  for (int x : cs.L)
    for (int y : g.neighbors(x))
      if (lowner[y] >= 0 && lowner[y] != lowner[x]) {
        ConnectingStructure s;
        s.kind = K::A1;
        s.i1 = lowner[x], s.i2 = lowner[y], s.edge = {x, y};
        return finish(s);
      }
  // A2
  for (int i2 = 0; i2 < lambda; ++i2) {
    auto ms = mask_of(n, cs.S_sharp[i2]);
    for (int x : cs.L)
      if (lowner[x] != i2)
        for (int y : g.neighbors(x))
          if (ms[y]) {
            ConnectingStructure s;
            s.kind = K::A2;
            s.i1 = lowner[x], s.i2 = i2, s.edge = {x, y};
            return finish(s);
          }
  }
  // A3
  auto mL = mask_of(n, cs.L);
  for (int x0 : cs.S) {
    if (!(R(degree_into(g, x0, mL)) >= (Rational(1, 2) - cs.gamma) * R(cs.k))) continue;
    std::vector<int> hit;
    for (int w : g.neighbors(x0))
      if (lowner[w] >= 0 && std::find(hit.begin(), hit.end(), lowner[w]) == hit.end()) hit.push_back(lowner[w]);
    if (hit.size() >= 2) {
      std::sort(hit.begin(), hit.end());
      ConnectingStructure s;
      s.kind = K::A3;
      s.vertex = x0, s.i1 = hit[0], s.i2 = hit[1];
      return finish(s);
    }
  }
  throw InternalError("find_connecting_edge: no A1/A2/A3 structure under verified hypotheses");
}

ConnectingStructure find_start_vertex(const Graph& g, const ClusterSets& cs) {
  require_deficient_setup(cs, "find_start_vertex");
  int lambda = static_cast<int>(cs.Li.size());
  for (int i0 = 0; i0 < lambda; ++i0)
    for (int v : cs.Li[i0]) {
      ConnectingStructure s;
      s.kind = ConnectingStructure::Kind::StartVertex;
      s.i0 = i0, s.vertex = v;
      if (verify_structure(g, cs, s).empty()) return s;
    }
  throw InternalError("find_start_vertex: no vertex under verified hypotheses");
}

ConnectingStructure deficient_cones(const Graph& g, const ClusterSets& cs) {
  require_deficient_setup(cs, "deficient_cones");
  int n = g.n();
  int lambda = static_cast<int>(cs.Li.size());
  long long k = cs.k;
  std::vector<Matching> E(lambda), D(lambda);
  std::vector<long long> base(lambda);
  std::string note;
  for (int i = 0; i < lambda; ++i) {
    VertexSet rest;
    std::set_difference(cs.L.begin(), cs.L.end(), cs.Li[i].begin(), cs.Li[i].end(), std::back_inserter(rest));
    E[i] = bipartite_max_matching(g, cs.Li[i], rest);
    long long lh = sz(cs.Li[i]) + sz(cs.S_heart[i]);
    if (lh + E[i].size() > k + 1) E[i] = truncated(E[i], std::max(k + 1 - lh, 0LL));
    base[i] = lh + E[i].size();
  }
  std::vector<int> order(lambda);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return base[a] > base[b]; });

  std::vector<char> usedD(n, 0);
  for (int i : order) {
    long long di = k + 1 - base[i];
    if (di <= 0) continue;
    auto mE = mask_of(n, E[i].vertices());
    VertexSet left;
    for (int u : cs.Li[i])
      if (!mE[u]) left.push_back(u);
    auto mHeart = mask_of(n, cs.S_heart[i]);
    VertexSet right;
    for (int v : cs.S)
      if (!mHeart[v] && !usedD[v]) right.push_back(v);
    // black edges: d_i per u, aimed outside L^i u S_heart^i u V(E^i)
    auto mLi = mask_of(n, cs.Li[i]);
    std::vector<char> outside(n, 0);
    for (int v = 0; v < n; ++v) outside[v] = !mLi[v] && !mHeart[v] && !mE[v];
    Graph black = black_subgraph(g, left, outside, di);
    Matching m = bipartite_max_matching(black, left, right);
    if (m.size() < di) {
      Matching full = bipartite_max_matching(g, left, right);
      if (full.size() > m.size()) {
        m = full;
        note += "D^" + std::to_string(i + 1) + " from all edges; ";
      }
    }
    D[i] = truncated(m, di);
    for (auto [a, b] : D[i].edges) usedD[a] = usedD[b] = 1;
  }

  // Candidates ordered by the averaged quantity; the first whose J reaches the bound wins.
  std::vector<VertexSet> heart_others(lambda);
  for (int i = 0; i < lambda; ++i) {
    for (int j = 0; j < lambda; ++j)
      if (j != i) heart_others[i].insert(heart_others[i].end(), cs.S_heart[j].begin(), cs.S_heart[j].end());
    heart_others[i] = normalized(heart_others[i]);
  }
  std::vector<long long> score(lambda);
  for (int i = 0; i < lambda; ++i) {
    auto mLi = mask_of(n, cs.Li[i]);
    VertexSet sx = cs.S_heart[i];
    for (auto [a, b] : D[i].edges) sx.push_back(mLi[a] ? b : a);
    sx = normalized(sx);
    VertexSet both;
    std::set_intersection(sx.begin(), sx.end(), heart_others[i].begin(), heart_others[i].end(),
                          std::back_inserter(both));
    score[i] = sz(cs.Li[i]) + E[i].size() + sz(both);
  }
  std::vector<int> cand(lambda);
  std::iota(cand.begin(), cand.end(), 0);
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return score[a] > score[b]; });

  std::string last;
  for (int i0 : cand) {
    auto mLi = mask_of(n, cs.Li[i0]);
    auto mOthers = mask_of(n, heart_others[i0]);
    ConnectingStructure s;
    s.kind = ConnectingStructure::Kind::Cones;
    s.i0 = i0;
    s.E = E[i0];
    for (auto [a, b] : D[i0].edges)
      if (mOthers[mLi[a] ? b : a]) s.J.edges.emplace_back(a, b);
    VertexSet Q;
    std::set_intersection(cs.S_heart[i0].begin(), cs.S_heart[i0].end(), heart_others[i0].begin(),
                          heart_others[i0].end(), std::back_inserter(Q));
    if (!Q.empty()) {
      auto taken = mask_of(n, s.E.vertices());
      for (int v : s.J.vertices()) taken[v] = 1;
      VertexSet free_l;
      for (int u : cs.Li[i0])
        if (!taken[u]) free_l.push_back(u);
      Matching j2 = bipartite_max_matching(g, Q, free_l);
      s.J.edges.insert(s.J.edges.end(), j2.edges.begin(), j2.edges.end());
      std::sort(s.J.edges.begin(), s.J.edges.end());
    }
    s.note = note + "score " + std::to_string(score[i0]);
    last = verify_structure(g, cs, s);
    if (last.empty()) return s;
  }
  throw InternalError("deficient_cones: no index reaches the bound (" + last + ")");
}

}  // namespace lks

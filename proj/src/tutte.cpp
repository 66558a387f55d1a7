#include "lks/tutte.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace lks {

void WeightedGraph::set_edge(int u, int v, const Rational& w) {
  if (w <= Rational(0)) throw InputError("edge weight must be positive");
  g_.add_edge(u, v);
  for (int x : {u, v}) {
    int y = x == u ? v : u;
    const auto& nb = g_.neighbors(x);
    auto pos = std::lower_bound(nb.begin(), nb.end(), y) - nb.begin();
    // the adjacency grew by one if the edge is new; keep w_ parallel
    if (w_[x].size() < nb.size()) w_[x].insert(w_[x].begin() + pos, w);
    else w_[x][pos] = w;
  }
}

Rational WeightedGraph::weight(int u, int v) const {
  const auto& nb = g_.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return 0;
  return w_[u][it - nb.begin()];
}

Rational WeightedGraph::wdeg(int v) const {
  Rational s;
  for (const auto& w : w_[v]) s += w;
  return s;
}

Rational WeightedGraph::wdeg(int v, const std::vector<char>& mask) const {
  Rational s;
  const auto& nb = g_.neighbors(v);
  for (size_t i = 0; i < nb.size(); ++i)
    if (mask[nb[i]]) s += w_[v][i];
  return s;
}

Rational WeightedGraph::max_weight() const {
  Rational s;
  for (const auto& row : w_)
    for (const auto& w : row) s = rmax(s, w);
  return s;
}

WeightedGraph parse_weights(const Graph& g, const std::string& text) {
  WeightedGraph h(g.n());
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long listed = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, w, extra;
    if (!(ls >> a)) continue;
    auto where = "weights line " + std::to_string(lineno) + ": ";
    if (!(ls >> b >> w) || (ls >> extra)) throw InputError(where + "expected 'u v w'");
    int u, v;
    try {
      size_t pu, pv;
      u = std::stoi(a, &pu);
      v = std::stoi(b, &pv);
      if (pu != a.size() || pv != b.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError(where + "bad vertex id");
    }
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw InputError(where + "vertex out of range");
    if (!g.has_edge(u, v)) throw InputError(where + "{" + a + "," + b + "} is not an edge of the graph");
    if (h.graph().has_edge(u, v)) throw InputError(where + "edge listed twice");
    Rational r;
    try {
      r = Rational::parse(w);
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
    if (r <= Rational(0)) throw InputError(where + "weight must be positive");
    h.set_edge(u, v, r);
    ++listed;
  }
  if (listed != g.m()) {
    for (auto [u, v] : g.edges())
      if (!h.graph().has_edge(u, v))
        throw InputError("weights: edge {" + std::to_string(u) + "," + std::to_string(v) + "} has no weight");
  }
  return h;
}

void check_tutte_preconditions(const WeightedGraph& h, const VertexSet& L, const Rational& sigma, const Rational& K) {
  int N = h.n();
  if (N == 0) throw PreconditionError("tutte: empty graph");
  if (K <= Rational(0)) throw PreconditionError("tutte: K must be positive");
  Rational s = h.max_weight();
  if (s == Rational(0)) s = 1;  // no edges; the edge bullet fails below anyway
  Rational hi = rmin(K / (Rational(32) * Rational(N) * s), Rational(1, 10));
  if (!(Rational(1, 2 * static_cast<long long>(N)) < sigma && sigma < hi))
    throw PreconditionError("tutte: need 1/(2N) < sigma < min{K/(32Ns), 1/10} (sigma=" + sigma.str() +
                            ", bound " + hi.str() + ")");
  std::vector<char> inL(N, 0);
  for (int v : L) {
    if (v < 0 || v >= N) throw InputError("tutte: vertex " + std::to_string(v) + " out of range");
    if (inL[v]) throw InputError("tutte: vertex " + std::to_string(v) + " listed twice in L");
    inL[v] = 1;
  }
  const Graph& g = h.graph();
  for (auto [u, v] : g.edges())
    if (!inL[u] && !inL[v])
      throw PreconditionError("tutte: V\\L is not independent (edge " + std::to_string(u) + "-" + std::to_string(v) +
                              ")");
  if (!(Rational(static_cast<long long>(L.size())) > Rational(N, 2) - sigma * Rational(N)))
    throw PreconditionError("tutte: need |L| > N/2 - sigma N");
  for (int v = 0; v < N; ++v) {
    if (inL[v] && h.wdeg(v) < K)
      throw PreconditionError("tutte: weighted degree of L vertex " + std::to_string(v) + " is below K");
  }
  bool edge = false;
  for (auto [u, v] : g.edges()) edge = edge || (inL[u] && inL[v]);
  if (!edge) throw PreconditionError("tutte: L induces no edge");
  for (int v = 0; v < N; ++v)
    if (!inL[v] && h.wdeg(v) >= (Rational(1) + sigma) * K)
      throw PreconditionError("tutte: weighted degree of vertex " + std::to_string(v) +
                              " outside L is not below (1+sigma)K");
}

std::vector<BulletResult> check_tutte(const WeightedGraph& h, const VertexSet& L, const Rational& sigma,
                                      const Rational& K, const TutteStructure& ts) {
  int N = h.n();
  const Graph& g = h.graph();
  std::vector<BulletResult> out;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    out.push_back({name, pass, pass ? "" : detail});
  };
  auto inL = mask_of(N, L);
  bool ok_m = is_matching(g, ts.M);
  add("matching", ok_m, "M is not a matching of H");
  bool ok_ab = ts.A >= 0 && ts.B >= 0 && ts.A < N && ts.B < N && g.has_edge(ts.A, ts.B);
  add("A~B", ok_ab, "A and B are not adjacent");
  bool meets = true;
  for (auto [a, b] : ts.M.edges) meets = meets && (inL[a] || inL[b]);
  add("edges-meet-L", meets, "an edge of M misses L");
  if (!ok_m || !ok_ab) return out;

  Rational half = (Rational(1) + sigma) * K / Rational(2);
  std::vector<char> star(N, 0);
  for (int v = 0; v < N; ++v) star[v] = h.wdeg(v) >= half;
  auto inM = mask_of(N, ts.M.vertices());
  if (ts.which == TutteCase::I) {
    add("deg(A,V(M))>=K", h.wdeg(ts.A, inM) >= K, "deg(A,V(M)) = " + h.wdeg(ts.A, inM).str());
    bool trans = true;
    for (auto [a, b] : ts.M.edges) trans = trans && !(g.has_edge(ts.A, a) && g.has_edge(ts.A, b));
    add("|N(A)^e|<=1", trans, "an edge of M has both ends in N(A)");
    std::vector<char> ml(N, 0);
    for (int v = 0; v < N; ++v) ml[v] = inM[v] || star[v];
    add("deg(B,V(M)uL*)", h.wdeg(ts.B, ml) >= half, "deg(B,V(M)uL*) = " + h.wdeg(ts.B, ml).str());
  } else {
    auto inX = mask_of(N, ts.Xprime);
    add("A,B in X'nL", inX[ts.A] && inX[ts.B] && inL[ts.A] && inL[ts.B], "A or B not in X' n L");
    std::vector<char> nx(N, 0);
    for (int v : ts.Xprime)
      for (int w : g.neighbors(v)) nx[w] = 1;
    int outside = 0;
    for (auto [a, b] : ts.M.edges)
      if (nx[a] && nx[b]) outside += !inX[a] + !inX[b];
    add("|V(M')\\X'|<=1", outside <= 1, "|V(M')\\X'| = " + std::to_string(outside));
    Rational slack = Rational(2) * sigma * Rational(N) * h.max_weight();
    bool deg = true;
    std::string bad;
    for (int x : ts.Xprime)
      if (h.wdeg(x, inM) < h.wdeg(x) - slack) {
        deg = false;
        bad = "vertex " + std::to_string(x) + " loses " + (h.wdeg(x) - h.wdeg(x, inM)).str() + " > 2 sigma N s";
        break;
      }
    add("deg(x,V(M))", deg, bad);
  }
  return out;
}

namespace {

bool all_pass(const std::vector<BulletResult>& r) {
  return std::all_of(r.begin(), r.end(), [](const BulletResult& b) { return b.pass; });
}

std::string first_failure(const std::vector<BulletResult>& r) {
  for (const auto& b : r)
    if (!b.pass) return b.name + ": " + b.detail;
  return "";
}

// First (A,B) in lexicographic edge order, both orientations, passing Case I
// with the given matching.
bool search_case_one(const WeightedGraph& h, const VertexSet& L, const Rational& sigma, const Rational& K,
                     TutteStructure& ts) {
  ts.which = TutteCase::I;
  ts.Xprime.clear();
  for (auto [u, v] : h.graph().edges())
    for (int flip = 0; flip < 2; ++flip) {
      ts.A = flip ? v : u;
      ts.B = flip ? u : v;
      if (all_pass(check_tutte(h, L, sigma, K, ts))) return true;
    }
  return false;
}

}  // namespace

TutteStructure tutte_structure(const WeightedGraph& h, const VertexSet& L, const Rational& sigma, const Rational& K) {
  check_tutte_preconditions(h, L, sigma, K);
  int N = h.n();
  const Graph& g = h.graph();
  auto inL = mask_of(N, L);
  Rational half = (Rational(1) + sigma) * K / Rational(2);
  TutteStructure ts;
  std::vector<char> star(N, 0);
  for (int v = 0; v < N; ++v)
    if (h.wdeg(v) >= half) {
      star[v] = 1;
      ts.Lstar.push_back(v);
    }

  auto ge = gallai_edmonds(g);
  ts.Q = ge.Q;
  auto inQ = mask_of(N, ge.Q);
  std::vector<int> comp_of(N, -1);
  for (size_t i = 0; i < ge.components.size(); ++i)
    for (int v : ge.components[i].vertices) comp_of[v] = static_cast<int>(i);

  // Local augmentation: re-point a Q vertex away from an L* partner to an
  // uncovered vertex outside L* while keeping one Q vertex per component.
  auto mate = ge.M.mates(N);
  std::vector<char> comp_used(ge.components.size(), 0);
  for (int q : ge.Q) comp_used[comp_of[mate[q]]] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int q : ge.Q) {
      int o = mate[q];
      if (!star[o]) continue;
      for (int p : g.neighbors(q)) {
        if (inQ[p] || star[p] || mate[p] >= 0) continue;
        int c = comp_of[p];
        if (c != comp_of[o] && comp_used[c]) continue;
        comp_used[comp_of[o]] = 0;
        mate[o] = -1;
        mate[q] = p;
        mate[p] = q;
        comp_used[c] = 1;
        changed = true;
        break;
      }
    }
  }
  ts.M0 = Matching::from_mates(mate);
  GEDecomposition check = ge;
  check.M = ts.M0;
  if (!check_ge(g, check).empty()) throw InternalError("tutte: augmentation broke the separator matching");

  VertexSet L0;
  for (int v : L)
    if (!inQ[v]) L0.push_back(v);
  std::sort(L0.begin(), L0.end());
  auto inL0 = mask_of(N, L0);
  std::pair<int, int> l0edge{-1, -1};
  for (auto [u, v] : g.edges())
    if (inL0[u] && inL0[v]) {
      l0edge = {u, v};
      break;
    }

  if (l0edge.first >= 0) {
    ts.branch = "L0-L0 edge";
    ts.which = TutteCase::II;
    ts.A = l0edge.first;
    ts.B = l0edge.second;
    std::vector<char> xm(N, 0);
    for (int v : L0) {
      xm[v] = 1;
      for (int w : g.neighbors(v)) xm[w] = 1;
    }
    for (int v = 0; v < N; ++v)
      if (xm[v] && !inQ[v]) ts.Xprime.push_back(v);
    const auto& C = ge.components[comp_of[ts.A]].vertices;
    int x = C[0];
    for (int v : C)
      if (mate[v] >= 0) x = v;
    VertexSet rest;
    for (int v : C)
      if (v != x) rest.push_back(v);
    auto m1 = max_matching(g.induced(rest));
    if (2 * m1.size() != static_cast<int>(rest.size())) throw InternalError("tutte: component is not factor critical");
    ts.M = ts.M0;
    for (auto [a, b] : m1.edges) ts.M.edges.push_back({rest[a], rest[b]});
    std::sort(ts.M.edges.begin(), ts.M.edges.end());
  } else if (L0.empty()) {
    ts.branch = "L0 empty";
    ts.which = TutteCase::II;
    ts.Xprime = all_vertices(N);
    ts.M = ts.M0;
    for (auto [u, v] : g.edges())
      if (inL[u] && inL[v]) {
        ts.A = u;
        ts.B = v;
        break;
      }
  } else {
    ts.branch = "L0 independent";
    ts.which = TutteCase::I;
    ts.M = ts.M0;
    auto inM = mask_of(N, ts.M.vertices());
    std::vector<char> ml(N, 0);
    for (int v = 0; v < N; ++v) ml[v] = inM[v] || star[v];
    std::vector<char> nl0(N, 0);
    for (int v : L0)
      for (int w : g.neighbors(v)) nl0[w] = 1;
    for (int b = 0; b < N && ts.B < 0; ++b) {
      if (!nl0[b] || h.wdeg(b) < K) continue;  // b in L~
      if (h.wdeg(b, ml) < half) continue;
      ts.B = b;
      for (int a : g.neighbors(b))
        if (inL0[a]) {
          ts.A = a;
          break;
        }
    }
    if (ts.B < 0) {
      // no B found; let the verifier report it and fall back
      ts.A = ts.B = -1;
    }
  }

  auto rep = check_tutte(h, L, sigma, K, ts);
  if (all_pass(rep)) return ts;

  ts.primary_failure = ts.branch + ": " + first_failure(rep);
  TutteStructure fb = ts;
  fb.M = ts.M0;
  if (search_case_one(h, L, sigma, K, fb)) {
    fb.branch = "fallback: Case I search with M0";
    return fb;
  }
  fb = ts;
  fb.which = TutteCase::II;
  fb.M = max_matching(g);
  fb.Xprime = all_vertices(N);
  for (auto [u, v] : g.edges())
    if (inL[u] && inL[v]) {
      fb.A = u;
      fb.B = v;
      break;
    }
  if (all_pass(check_tutte(h, L, sigma, K, fb))) {
    fb.branch = "fallback: Case II with X'=V and a maximum matching";
    return fb;
  }
  if (search_case_one(h, L, sigma, K, fb)) {
    fb.branch = "fallback: Case I search with a maximum matching";
    return fb;
  }
  throw InternalError("tutte: no structure verified (" + ts.primary_failure + ")");
}

namespace {

std::vector<int> sample(std::mt19937_64& rng, const VertexSet& from, int k) {
  std::vector<int> v = from;
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(std::min<size_t>(v.size(), static_cast<size_t>(k)));
  return v;
}

// Relabels by a random permutation so structure is not visible in the ids.
TutteInstance shuffled(const TutteInstance& in, std::mt19937_64& rng) {
  int n = in.h.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  TutteInstance out{WeightedGraph(n), {}, in.sigma, in.K};
  for (auto [u, v] : in.h.graph().edges()) out.h.set_edge(perm[u], perm[v], in.h.weight(u, v));
  for (int v : in.L) out.L.push_back(perm[v]);
  std::sort(out.L.begin(), out.L.end());
  return out;
}

}  // namespace

TutteInstance make_tutte_instance(TutteFamily family, int N, std::uint64_t seed) {
  if (N < 10) throw InputError("make_tutte_instance: N too small");
  std::mt19937_64 rng(seed);
  TutteInstance t{WeightedGraph(N), {}, {}, {}};
  auto& h = t.h;
  VertexSet Lset, Sset;
  auto split = [&](int nl) {
    for (int v = 0; v < N; ++v) (v < nl ? Lset : Sset).push_back(v);
  };
  // smallest integer strictly above N/2 - sigma N
  auto min_L = [&](const Rational& sigma) {
    return (Rational(N, 2) - sigma * Rational(N)).floor() + 1;
  };
  auto top_up = [&](const Rational& K, bool quarter) {
    for (int u : Lset) {
      int guard = 0;
      while (h.wdeg(u) < K && guard++ < 100000) {
        int v = Lset[rng() % Lset.size()];
        if (v == u || h.graph().has_edge(u, v)) continue;
        h.set_edge(u, v, quarter ? Rational(1 + static_cast<long long>(rng() % 4), 4) : Rational(1));
      }
    }
  };

  if (family != TutteFamily::LargeSideSeparator) {
    t.sigma = Rational(3, 5 * static_cast<long long>(N));
    t.K = 20;
  }
  Rational cap = (Rational(1) + t.sigma) * t.K;

  switch (family) {
    case TutteFamily::Generic: {
      split(static_cast<int>(min_L(t.sigma)));
      for (int s : Sset) {
        Rational target(2 + static_cast<long long>(rng() % 19));
        for (int guard = 0; guard < 1000 && h.wdeg(s) < target; ++guard) {
          int l = Lset[rng() % Lset.size()];
          Rational w(1 + static_cast<long long>(rng() % 4), 4);
          if (h.graph().has_edge(s, l) || h.wdeg(s) + w >= cap) continue;
          h.set_edge(s, l, w);
        }
      }
      top_up(t.K, true);
      break;
    }
    case TutteFamily::LargeSideSeparator: {
      int nl = (N - 1) / 2;
      split(nl);
      t.sigma = Rational(5, 4 * static_cast<long long>(N));
      t.K = nl - 3;
      cap = (Rational(1) + t.sigma) * t.K;
      for (int s : Sset)
        for (int l : sample(rng, Lset, static_cast<int>(t.K.floor()) - static_cast<int>(rng() % 4)))
          h.set_edge(s, l, 1);
      top_up(t.K, false);
      break;
    }
    case TutteFamily::DenseL: {
      split(N * 3 / 5);
      for (int s : Sset)
        for (int l : sample(rng, Lset, 1 + static_cast<int>(rng() % 19))) h.set_edge(s, l, 1);
      top_up(t.K, true);
      break;
    }
    case TutteFamily::HubSeparator: {
      int nl = static_cast<int>(min_L(t.sigma));
      split(nl);
      int hubs = 25;
      VertexSet H(Lset.begin(), Lset.begin() + hubs);
      for (int v = hubs; v < nl; ++v)
        for (int x : sample(rng, H, 20)) h.set_edge(v, x, 1);
      for (int s : Sset)
        for (int x : sample(rng, H, 1 + static_cast<int>(rng() % 20))) h.set_edge(s, x, 1);
      h.set_edge(H[0], H[1], 1);
      break;
    }
  }
  t.L = Lset;
  bool ledge = false;
  for (auto [u, v] : h.graph().edges()) ledge = ledge || (u < static_cast<int>(Lset.size()) && v < static_cast<int>(Lset.size()));
  if (!ledge) h.set_edge(Lset[0], Lset[1], 1);
  auto out = shuffled(t, rng);
  check_tutte_preconditions(out.h, out.L, out.sigma, out.K);
  return out;
}

}  // namespace lks

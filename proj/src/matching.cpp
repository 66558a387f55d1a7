#include "lks/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace lks {

VertexSet Matching::vertices() const {
  VertexSet v;
  for (auto [a, b] : edges) {
    v.push_back(a);
    v.push_back(b);
  }
  return normalized(v);
}

std::vector<int> Matching::mates(int n) const {
  std::vector<int> mate(n, -1);
  for (auto [a, b] : edges) {
    mate[a] = b;
    mate[b] = a;
  }
  return mate;
}

Matching Matching::from_mates(const std::vector<int>& mate) {
  Matching m;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) m.edges.push_back({v, mate[v]});
  return m;
}

bool is_matching(const Graph& g, const Matching& m) {
  std::vector<char> seen(g.n(), 0);
  for (auto [a, b] : m.edges) {
    if (a < 0 || b < 0 || a >= g.n() || b >= g.n() || !g.has_edge(a, b)) return false;
    if (seen[a] || seen[b]) return false;
    seen[a] = seen[b] = 1;
  }
  return true;
}

namespace {

// Edmonds' search, one root at a time. Vertices with alive == 0 are ignored.
class Blossom {
 public:
  explicit Blossom(const Graph& g) : g_(g), n_(g.n()), alive_(n_, 1), match_(n_, -1) {}

  void kill(int v) { alive_[v] = 0; }
  std::vector<int>& mate() { return match_; }

  void greedy() {
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v] || match_[v] >= 0) continue;
      for (int w : g_.neighbors(v))
        if (alive_[w] && match_[w] < 0) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
    }
  }

  // Augments along a path from root if one exists.
  bool augment_from(int root) {
    int v = find_path(root);
    if (v < 0) return false;
    while (v >= 0) {
      int pv = p_[v], ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
    return true;
  }

  void maximize() {
    greedy();
    for (int v = 0; v < n_; ++v)
      if (alive_[v] && match_[v] < 0) augment_from(v);
  }

  // Outer vertices of the last failed search.
  const std::vector<char>& outer() const { return used_; }

  int find_path(int root) {
    used_.assign(n_, 0);
    p_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (!alive_[to] || base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && p_[match_[to]] >= 0)) {
          int cur = lca(v, to);
          blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (alive_[i] && blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
        } else if (p_[to] < 0) {
          p_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] < 0) break;
      a = p_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  const Graph& g_;
  int n_;
  std::vector<char> alive_;
  std::vector<int> match_, p_, base_;
  std::vector<char> used_, blossom_;
};

// D for a graph given one of its maximum matchings (as mates).
std::vector<char> d_mask(const Graph& g, const std::vector<int>& mate) {
  Blossom b(g);
  b.mate() = mate;
  std::vector<char> d(g.n(), 0);
  for (int r = 0; r < g.n(); ++r) {
    if (mate[r] >= 0) continue;
    if (b.find_path(r) >= 0) throw InternalError("d_mask: matching is not maximum");
    const auto& out = b.outer();
    for (int v = 0; v < g.n(); ++v)
      if (out[v]) d[v] = 1;
  }
  return d;
}

std::vector<VertexSet> components_avoiding(const Graph& g, const std::vector<char>& removed) {
  int n = g.n();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.neighbors(v))
        if (!removed[w] && comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace

Matching max_matching(const Graph& g) {
  Blossom b(g);
  b.maximize();
  return Matching::from_mates(b.mate());
}

int matching_number(const Graph& g) { return max_matching(g).size(); }

VertexSet gallai_edmonds_D(const Graph& g) {
  auto m = max_matching(g);
  auto d = d_mask(g, m.mates(g.n()));
  VertexSet out;
  for (int v = 0; v < g.n(); ++v)
    if (d[v]) out.push_back(v);
  return out;
}

bool is_factor_critical(const Graph& g) {
  int n = g.n();
  if (n % 2 == 0) return false;
  if (n == 1) return true;
  Blossom full(g);
  full.maximize();
  const std::vector<int> base = full.mate();
  for (int v = 0; v < n; ++v) {
    // G - v from the maximum matching of G with v removed: at most two
    // exposed vertices remain, so one augmentation decides it.
    Blossom b(g);
    b.kill(v);
    auto mate = base;
    if (mate[v] >= 0) mate[mate[v]] = -1;
    mate[v] = -1;
    b.mate() = mate;
    int exposed = -1, count = 0;
    for (int w = 0; w < n; ++w)
      if (w != v && mate[w] < 0) {
        exposed = w;
        ++count;
      }
    if (count == 0) continue;
    if (count > 2) return false;
    if (!b.augment_from(exposed)) return false;
  }
  return true;
}

Matching bipartite_max_matching(const Graph& g, const VertexSet& W1, const VertexSet& W2) {
  int n = g.n();
  std::vector<int> side(n, 0);
  for (int v : W1) side.at(v) = 1;
  for (int v : W2) side.at(v) = side[v] == 1 ? 3 : 2;
  int a = static_cast<int>(W1.size());
  std::vector<std::vector<int>> adj(a);
  for (int i = 0; i < a; ++i)
    for (int w : g.neighbors(W1[i]))
      if (side[w] == 2) adj[i].push_back(w);
  std::vector<int> matchL(a, -1), matchR(n, -1), dist(a);
  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int i = 0; i < a; ++i) {
      dist[i] = matchL[i] < 0 ? 0 : -1;
      if (matchL[i] < 0) q.push(i);
    }
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int w : adj[i]) {
        int j = matchR[w];
        if (j < 0) {
          found = true;
        } else if (dist[j] < 0) {
          dist[j] = dist[i] + 1;
          q.push(j);
        }
      }
    }
    return found;
  };
  std::vector<size_t> it(a);
  auto dfs = [&](auto&& self, int i) -> bool {
    for (; it[i] < adj[i].size(); ++it[i]) {
      int w = adj[i][it[i]];
      int j = matchR[w];
      if (j < 0 || (dist[j] == dist[i] + 1 && self(self, j))) {
        matchL[i] = w;
        matchR[w] = i;
        return true;
      }
    }
    dist[i] = -1;
    return false;
  };
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int i = 0; i < a; ++i)
      if (matchL[i] < 0) dfs(dfs, i);
  }
  Matching m;
  for (int i = 0; i < a; ++i)
    if (matchL[i] >= 0) m.edges.push_back({std::min(W1[i], matchL[i]), std::max(W1[i], matchL[i])});
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Matching hall_cover_matching(const Graph& g, const VertexSet& W1, const VertexSet& W2) {
  int n = g.n();
  std::vector<int> side(n, 0);
  for (int v : W1) {
    if (v < 0 || v >= n) throw InputError("hall_cover_matching: vertex " + std::to_string(v) + " out of range");
    if (side[v]) throw PreconditionError("hall_cover_matching: W1 lists vertex " + std::to_string(v) + " twice");
    side[v] = 1;
  }
  for (int v : W2) {
    if (v < 0 || v >= n) throw InputError("hall_cover_matching: vertex " + std::to_string(v) + " out of range");
    if (side[v]) throw PreconditionError("hall_cover_matching: W1 and W2 are not disjoint at " + std::to_string(v));
    side[v] = 2;
  }
  if (W1.size() > W2.size()) throw PreconditionError("hall_cover_matching: |W1| > |W2|");
  long long need = static_cast<long long>(W1.size());  // 2*deg >= |W1|
  for (int v = 0; v < n; ++v) {
    if (!side[v]) continue;
    long long d = 0;
    for (int w : g.neighbors(v)) d += side[w] && side[w] != side[v];
    if (2 * d < need)
      throw PreconditionError("hall_cover_matching: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(d) + " < |W1|/2");
  }
  auto m = bipartite_max_matching(g, W1, W2);
  if (m.size() != static_cast<int>(W1.size())) throw InternalError("hall_cover_matching: W1 not covered");
  return m;
}

namespace {

// Decomposes K (vertex set with a perfect matching inside `mate`) by moving
// one vertex to Q and decomposing the rest; appends to ge.
void split_perfect(const Graph& g, const VertexSet& K, std::vector<int>& mate, GEDecomposition& ge,
                   std::vector<char>& inQ) {
  auto mask = mask_of(g.n(), K);
  int u = K[0];
  for (int v : K)
    if (degree_into(g, v, mask) > degree_into(g, u, mask)) u = v;
  int v = mate[u];
  inQ[u] = 1;
  ge.Q.push_back(u);
  ge.M.edges.push_back({std::min(u, v), std::max(u, v)});
  mate[u] = mate[v] = -1;

  VertexSet rest;
  for (int w : K)
    if (w != u) rest.push_back(w);
  Graph h = g.induced(rest);
  std::vector<int> local(rest.size(), -1), index(g.n(), -1);
  for (size_t i = 0; i < rest.size(); ++i) index[rest[i]] = static_cast<int>(i);
  for (size_t i = 0; i < rest.size(); ++i)
    if (mate[rest[i]] >= 0) local[i] = index[mate[rest[i]]];
  auto d = d_mask(h, local);
  std::vector<char> a(rest.size(), 0), removed(rest.size(), 0);
  for (size_t i = 0; i < rest.size(); ++i) {
    if (d[i]) continue;
    for (int w : h.neighbors(static_cast<int>(i)))
      if (d[w]) a[i] = 1;
  }
  for (size_t i = 0; i < rest.size(); ++i)
    if (a[i]) {
      int x = rest[i], y = mate[x];
      inQ[x] = 1;
      ge.Q.push_back(x);
      ge.M.edges.push_back({std::min(x, y), std::max(x, y)});
      removed[i] = 1;
    }
  for (auto& c : components_avoiding(h, removed)) {
    VertexSet orig;
    for (int i : c) orig.push_back(rest[i]);
    if (d[c[0]]) {
      ge.components.push_back({orig, false});
    } else {
      split_perfect(g, orig, mate, ge, inQ);
    }
  }
}

}  // namespace

GEDecomposition gallai_edmonds(const Graph& g) {
  int n = g.n();
  GEDecomposition ge;
  ge.maximum = max_matching(g);
  auto mate = ge.maximum.mates(n);
  auto d = d_mask(g, mate);
  std::vector<char> inQ(n, 0);
  for (int v = 0; v < n; ++v) {
    if (d[v]) continue;
    for (int w : g.neighbors(v))
      if (d[w]) inQ[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (inQ[v]) {
      ge.Q.push_back(v);
      ge.M.edges.push_back({std::min(v, mate[v]), std::max(v, mate[v])});
    }
  auto work = mate;
  for (auto& c : components_avoiding(g, inQ)) {
    if (d[c[0]]) {
      ge.components.push_back({c, false});
    } else {
      split_perfect(g, c, work, ge, inQ);
    }
  }
  std::sort(ge.Q.begin(), ge.Q.end());
  std::sort(ge.M.edges.begin(), ge.M.edges.end());
  std::sort(ge.components.begin(), ge.components.end(),
            [](const GEComponent& x, const GEComponent& y) { return x.vertices < y.vertices; });
  for (auto& c : ge.components) c.factor_critical = is_factor_critical(g.induced(c.vertices));
  std::string err = check_ge(g, ge);
  if (!err.empty()) throw InternalError("gallai_edmonds: " + err);
  return ge;
}

std::string check_ge(const Graph& g, const GEDecomposition& ge) {
  int n = g.n();
  std::vector<char> inQ(n, 0);
  for (int q : ge.Q) {
    if (q < 0 || q >= n || inQ[q]) return "bad Q";
    inQ[q] = 1;
  }
  auto comps = components_avoiding(g, inQ);
  std::vector<VertexSet> listed;
  for (auto& c : ge.components) listed.push_back(normalized(c.vertices));
  std::sort(comps.begin(), comps.end());
  std::sort(listed.begin(), listed.end());
  if (comps != listed) return "components do not match H - Q";
  std::vector<int> comp_of(n, -1);
  for (size_t i = 0; i < comps.size(); ++i) {
    if (!is_factor_critical(g.induced(comps[i]))) return "a component of H - Q is not factor critical";
    for (int v : comps[i]) comp_of[v] = static_cast<int>(i);
  }
  if (!is_matching(g, ge.M)) return "M is not a matching of H";
  if (ge.M.size() != static_cast<int>(ge.Q.size())) return "|M| != |Q|";
  std::vector<char> qused(n, 0), cused(comps.size(), 0);
  for (auto [a, b] : ge.M.edges) {
    if (inQ[a] == inQ[b]) return "an edge of M does not join Q to H - Q";
    int q = inQ[a] ? a : b, o = inQ[a] ? b : a;
    if (qused[q]) return "Q vertex matched twice";
    qused[q] = 1;
    if (cused[comp_of[o]]) return "two Q vertices matched into one component";
    cused[comp_of[o]] = 1;
  }
  return "";
}

namespace {

void check_split_pre(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, const Rational& a,
                     const Rational& b, const Rational& delta) {
  if (alpha.size() != beta.size()) throw InputError("weight_split: alpha and beta differ in length");
  if (alpha.empty()) throw PreconditionError("weight_split: empty index set");
  if (delta <= Rational(0)) throw PreconditionError("weight_split: delta must be positive");
  if (a < Rational(0) || b < Rational(0)) throw PreconditionError("weight_split: a and b must be nonnegative");
  Rational sa, sb;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] <= Rational(0) || alpha[i] > delta || beta[i] <= Rational(0) || beta[i] > delta)
      throw PreconditionError("weight_split: weight of index " + std::to_string(i) + " not in (0, delta]");
    sa += alpha[i];
    sb += beta[i];
  }
  if (a / sa + b / sb > Rational(1)) throw PreconditionError("weight_split: a/sum(alpha) + b/sum(beta) > 1");
}

}  // namespace

bool weight_split_valid(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, const Rational& a,
                        const Rational& b, const Rational& delta, const WeightSplit& w) {
  size_t n = alpha.size();
  std::vector<int> seen(n, 0);
  Rational sa, sb;
  for (int i : w.Ia) {
    if (i < 0 || static_cast<size_t>(i) >= n || seen[i]++) return false;
    sa += alpha[i];
  }
  for (int i : w.Ib) {
    if (i < 0 || static_cast<size_t>(i) >= n || seen[i]++) return false;
    sb += beta[i];
  }
  if (w.Ia.size() + w.Ib.size() != n) return false;
  return sa > a - delta && sb >= b;
}

WeightSplit weight_split(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, const Rational& a,
                         const Rational& b, const Rational& delta) {
  check_split_pre(alpha, beta, a, b, delta);
  int n = static_cast<int>(alpha.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return beta[x] * alpha[y] > beta[y] * alpha[x]; });
  WeightSplit w;
  Rational sb;
  size_t k = 0;
  while (k < order.size() && sb < b) sb += beta[order[k++]];
  w.Ib.assign(order.begin(), order.begin() + static_cast<long>(k));
  w.Ia.assign(order.begin() + static_cast<long>(k), order.end());
  std::sort(w.Ia.begin(), w.Ia.end());
  std::sort(w.Ib.begin(), w.Ib.end());
  if (weight_split_valid(alpha, beta, a, b, delta, w)) return w;

  if (n > 25) throw InternalError("weight_split: greedy split failed and |I| > 25");
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    WeightSplit e;
    e.used_fallback = true;
    for (int i = 0; i < n; ++i) (mask >> i & 1 ? e.Ib : e.Ia).push_back(i);
    if (weight_split_valid(alpha, beta, a, b, delta, e)) return e;
  }
  throw InternalError("weight_split: no valid partition exists");
}

}  // namespace lks

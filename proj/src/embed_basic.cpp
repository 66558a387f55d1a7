#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <deque>
#include <functional>
#include <limits>

#include <omp.h>

#include "lks/embed.hpp"
#include "lks/matching.hpp"

namespace lks {

std::string to_string(EmbedStatus s) {
  switch (s) {
    case EmbedStatus::Found:
      return "found";
    case EmbedStatus::NotFound:
      return "not-found";
    case EmbedStatus::Timeout:
      return "timeout";
  }
  return "?";
}

EmbedCheck validate_embedding(const Graph& host, const Graph& pattern, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != pattern.n())
    return {false, "map has " + std::to_string(map.size()) + " entries for " + std::to_string(pattern.n()) +
                       " pattern vertices"};
  std::vector<int> owner(host.n(), -1);
  for (int x = 0; x < pattern.n(); ++x) {
    int v = map[x];
    if (v < 0 || v >= host.n()) return {false, "vertex " + std::to_string(x) + " mapped outside the host"};
    if (owner[v] >= 0)
      return {false, "not injective: " + std::to_string(owner[v]) + " and " + std::to_string(x) + " both map to " +
                         std::to_string(v)};
    owner[v] = x;
  }
  for (auto [x, y] : pattern.edges())
    if (!host.has_edge(map[x], map[y]))
      return {false, "edge " + std::to_string(x) + "-" + std::to_string(y) + " not preserved (" +
                         std::to_string(map[x]) + "-" + std::to_string(map[y]) + " missing)"};
  return {true, ""};
}

EmbedCheck validate_embedding(const Graph& host, const RootedTree& pattern, const std::vector<int>& map) {
  return validate_embedding(host, pattern.to_graph(), map);
}

RootedForest RootedForest::from_tree(const RootedTree& t) { return {t.parents()}; }

Graph RootedForest::to_graph() const {
  Graph g(n());
  for (int v = 0; v < n(); ++v)
    if (parent[v] >= 0) g.add_edge(v, parent[v]);
  return g;
}

long long min_degree_into(const Graph& g, const VertexSet& A, const VertexSet& B) {
  auto mB = mask_of(g.n(), B);
  long long best = std::numeric_limits<long long>::max();
  for (int v : A) best = std::min<long long>(best, degree_into(g, v, mB));
  return best;
}

namespace {

void check_vertices(const Graph& g, const VertexSet& s, const char* who) {
  for (int v : s)
    if (v < 0 || v >= g.n()) throw InputError(std::string(who) + ": vertex " + std::to_string(v) + " out of range");
}

void check_disjoint(const Graph& g, const VertexSet& a, const VertexSet& b, const char* who) {
  check_vertices(g, a, who);
  check_vertices(g, b, who);
  auto ma = mask_of(g.n(), a);
  for (int v : b)
    if (ma[v]) throw InputError(std::string(who) + ": sets are not disjoint");
}

EmbedOutcome found(std::vector<int> map, std::string strategy, long long nodes) {
  EmbedOutcome o;
  o.status = EmbedStatus::Found;
  o.embedding.map = std::move(map);
  o.strategy = std::move(strategy);
  o.nodes = nodes;
  return o;
}

// Unused neighbour of v inside `allowed` (or anywhere when allowed is empty), lowest id.
int free_neighbor(const Graph& g, int v, const std::vector<char>& used, const std::vector<char>* allowed) {
  for (int w : g.neighbors(v))
    if (!used[w] && (!allowed || (*allowed)[w])) return w;
  return -1;
}

}  // namespace

EmbedOutcome greedy_embed(const Graph& g, const RootedTree& t, const GreedyMode& mode) {
  int n = t.n();
  std::vector<int> map(n, -1);
  std::vector<char> used(g.n(), 0);
  if (mode.kind == GreedyMode::Kind::MinDegree) {
    if (g.n() == 0 || g.min_degree() < n - 1)
      throw PreconditionError("greedy_embed: delta(G) = " + std::to_string(g.n() ? g.min_degree() : 0) +
                              " < v(T)-1 = " + std::to_string(n - 1));
    for (int x : t.bfs_order()) {
      int v = t.parent(x) < 0 ? 0 : free_neighbor(g, map[t.parent(x)], used, nullptr);
      if (v < 0) throw InternalError("greedy_embed: ran out of neighbours under the degree bound");
      map[x] = v;
      used[v] = 1;
    }
    return found(std::move(map), "greedy-min-degree", n);
  }

  check_disjoint(g, mode.V1, mode.V2, "greedy_embed");
  auto cs = color_stats(t);
  long long te = static_cast<long long>(cs.Te.size()), to = static_cast<long long>(cs.To.size());
  if (min_degree_into(g, mode.V1, mode.V2) < te)
    throw PreconditionError("greedy_embed: delta(V1,V2) < |Te| = " + std::to_string(te));
  if (min_degree_into(g, mode.V2, mode.V1) < to)
    throw PreconditionError("greedy_embed: delta(V2,V1) < |To| = " + std::to_string(to));
  std::vector<char> inTe(n, 0);
  for (int x : cs.Te) inTe[x] = 1;
  auto m1 = mask_of(g.n(), mode.V1), m2 = mask_of(g.n(), mode.V2);
  int root = t.root();
  const VertexSet& home = inTe[root] ? mode.V2 : mode.V1;
  if (home.empty()) throw PreconditionError("greedy_embed: the root's side is empty");
  for (int x : t.bfs_order()) {
    int v = x == root ? *std::min_element(home.begin(), home.end())
                      : free_neighbor(g, map[t.parent(x)], used, inTe[x] ? &m2 : &m1);
    if (v < 0) throw InternalError("greedy_embed: bipartite step stuck under the degree bounds");
    map[x] = v;
    used[v] = 1;
  }
  return found(std::move(map), "greedy-bipartite", n);
}

EmbedOutcome embed_semiindependent(const Graph& g, const VertexSet& V1, const VertexSet& V2, const RootedTree& t,
                                   const VertexSet& U1, const VertexSet& U2) {
  check_disjoint(g, V1, V2, "embed_semiindependent");
  auto sc = check_semiindependent(t, U1, U2);
  if (!sc.semiindependent) throw PreconditionError("embed_semiindependent: (U1,U2) is not semiindependent");
  long long u1 = static_cast<long long>(U1.size());
  int n = t.n();
  if (min_degree_into(g, V1, V2) < u1) throw PreconditionError("embed_semiindependent: delta(V1,V2) < |U1|");
  if (min_degree_into(g, V1, V1) < u1) throw PreconditionError("embed_semiindependent: delta(V1,V1) < |U1|");
  if (min_degree_into(g, V2, V1) < u1) throw PreconditionError("embed_semiindependent: delta(V2,V1) < |U1|");
  long long dV1 = min_degree_into(g, V1, all_vertices(g.n()));
  if (dV1 < n - 1) throw PreconditionError("embed_semiindependent: delta(V1) < v(F)-1");

  std::vector<int> map(n, -1);
  std::vector<char> used(g.n(), 0), inU1(n, 0), leaf2(n, 0);
  for (int x : U1) inU1[x] = 1;
  for (int x : U2)
    if (t.degree(x) == 1) leaf2[x] = 1;
  if (n == 1) {
    const VertexSet& home = inU1[0] || V2.empty() ? V1 : V2;
    if (home.empty()) throw PreconditionError("embed_semiindependent: no host vertex available");
    return found({*std::min_element(home.begin(), home.end())}, "semiindependent", 1);
  }
  auto m1 = mask_of(g.n(), V1), m2 = mask_of(g.n(), V2);
  int start = -1;
  for (int x : t.bfs_order())
    if (!leaf2[x]) {
      start = x;
      break;
    }
  // start exists: U2 is independent, so not every vertex is a U2 leaf
  const VertexSet& home = inU1[start] ? V1 : V2;
  if (home.empty()) throw PreconditionError("embed_semiindependent: the start vertex's side is empty");
  std::deque<int> queue{start};
  map[start] = *std::min_element(home.begin(), home.end());
  used[map[start]] = 1;
  long long placed = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : t.neighbors(x)) {
      if (map[y] >= 0 || leaf2[y]) continue;
      int v = free_neighbor(g, map[x], used, inU1[y] ? &m1 : &m2);
      if (v < 0) throw InternalError("embed_semiindependent: greedy step stuck under the degree bounds");
      map[y] = v;
      used[v] = 1;
      ++placed;
      queue.push_back(y);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (!leaf2[x]) continue;
    int p = t.neighbors(x)[0];
    int v = free_neighbor(g, map[p], used, nullptr);
    if (v < 0) throw InternalError("embed_semiindependent: no room for a U2 leaf");
    map[x] = v;
    used[v] = 1;
    ++placed;
  }
  return found(std::move(map), "semiindependent", placed);
}

EmbedOutcome embed_with_leaf_matching(const Graph& h, const VertexSet& A, const VertexSet& B, const RootedForest& F,
                                      const VertexSet& O1, const VertexSet& O2, int f) {
  check_disjoint(h, A, B, "embed_with_leaf_matching");
  int n = F.n();
  if (f < 0) throw InputError("embed_with_leaf_matching: f must be nonnegative");
  for (int v = 0; v < n; ++v)
    if (F.parent[v] < -1 || F.parent[v] >= n || F.parent[v] == v)
      throw InputError("embed_with_leaf_matching: bad parent entry at " + std::to_string(v));
  Graph fg = F.to_graph();
  if (fg.m() != n - std::count(F.parent.begin(), F.parent.end(), -1))
    throw InputError("embed_with_leaf_matching: parent pointers do not form a forest");
  std::vector<int> side(n, 0);
  for (int x : O1) {
    if (x < 0 || x >= n || side[x]) throw InputError("embed_with_leaf_matching: O1/O2 is not a partition");
    side[x] = 1;
  }
  for (int x : O2) {
    if (x < 0 || x >= n || side[x]) throw InputError("embed_with_leaf_matching: O1/O2 is not a partition");
    side[x] = 2;
  }
  if (static_cast<int>(O1.size() + O2.size()) != n)
    throw InputError("embed_with_leaf_matching: O1/O2 is not a partition");

  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    if (F.parent[v] >= 0) children[F.parent[v]].push_back(v);
  std::vector<char> leaf(n, 0);
  for (int v = 0; v < n; ++v) leaf[v] = fg.degree(v) == 1;
  VertexSet P;
  for (int u = 0; u < n; ++u) {
    if (side[u] != 2) continue;
    int c = 0;
    for (int w : children[u]) c += leaf[w];
    if (c == 1) P.push_back(u);
  }
  long long o1 = static_cast<long long>(O1.size());
  long long o2_nonleaf = 0;
  for (int x : O2) o2_nonleaf += !leaf[x];

  for (auto [x, y] : fg.edges())
    if (side[x] == 2 && side[y] == 2) throw PreconditionError("embed_with_leaf_matching: O2 is not independent");
  if (static_cast<long long>(A.size()) < o1) throw PreconditionError("embed_with_leaf_matching: |A| < |O1|");
  if (min_degree_into(h, A, A) <= o1 - f) throw PreconditionError("embed_with_leaf_matching: delta(A,A) <= |O1|-f");
  if (min_degree_into(h, B, A) <= o1 - f) throw PreconditionError("embed_with_leaf_matching: delta(B,A) <= |O1|-f");
  if (min_degree_into(h, A, B) <= static_cast<long long>(B.size()) - f)
    throw PreconditionError("embed_with_leaf_matching: delta(A,B) <= |B|-f");
  if (static_cast<long long>(B.size()) < o2_nonleaf)
    throw PreconditionError("embed_with_leaf_matching: |B| < |O2 \\ W|");
  if (min_degree_into(h, A, all_vertices(h.n())) < n - 1)
    throw PreconditionError("embed_with_leaf_matching: delta(A) < v(F)-1");
  if (static_cast<long long>(P.size()) < 2LL * f)
    throw PreconditionError("embed_with_leaf_matching: |P| = " + std::to_string(P.size()) + " < 2f");

  // P': prefer vertices whose parent is not itself a leaf, so N(P') n W is
  // exactly the matched leaf children
  std::stable_sort(P.begin(), P.end(), [&](int a, int b) {
    bool la = F.parent[a] >= 0 && leaf[F.parent[a]], lb = F.parent[b] >= 0 && leaf[F.parent[b]];
    return la < lb;
  });
  VertexSet Pp(P.begin(), P.begin() + 2L * f);
  std::vector<char> inWp(n, 0), inPp(n, 0);
  for (int u : Pp) inPp[u] = 1;
  for (int x = 0; x < n; ++x) {
    if (!leaf[x]) continue;
    if (side[x] == 2) inWp[x] = 1;
    for (int y : fg.neighbors(x))
      if (inPp[y]) inWp[x] = 1;
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(h.n(), 0);
  auto mA = mask_of(h.n(), A), mB = mask_of(h.n(), B);
  std::vector<char> notA(h.n(), 1);
  for (int v : A) notA[v] = 0;
  long long placed = 0;
  auto place = [&](int x, int v) {
    map[x] = v;
    used[v] = 1;
    ++placed;
  };
  // F' = F - W' greedily, O1 -> A and O2 -> B (O2 may spill outside A when B is full)
  for (int root = 0; root < n; ++root) {
    if (F.parent[root] >= 0) continue;
    std::deque<int> queue;
    auto seed = [&](int x) {
      const VertexSet& home = side[x] == 1 ? A : B;
      for (int v : home)
        if (!used[v]) {
          place(x, v);
          queue.push_back(x);
          return true;
        }
      return false;
    };
    // the component's first vertex outside W'
    int start = -1;
    {
      std::deque<int> scan{root};
      while (!scan.empty() && start < 0) {
        int x = scan.front();
        scan.pop_front();
        if (!inWp[x]) start = x;
        for (int c : children[x]) scan.push_back(c);
      }
    }
    if (start < 0) continue;
    if (!seed(start)) {
      EmbedOutcome o;
      o.strategy = "leaf-matching";
      o.detail = "greedy stage found no free start vertex";
      return o;
    }
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : fg.neighbors(x)) {
        if (map[y] >= 0 || inWp[y]) continue;
        int v = free_neighbor(h, map[x], used, side[y] == 1 ? &mA : &mB);
        if (v < 0 && side[y] == 2) v = free_neighbor(h, map[x], used, &notA);
        if (v < 0) {
          EmbedOutcome o;
          o.strategy = "leaf-matching";
          o.detail = "greedy stage stuck at pattern vertex " + std::to_string(y);
          return o;
        }
        place(y, v);
        queue.push_back(y);
      }
    }
  }

  // leaves of P' matched into the unused part of A
  VertexSet Aprime, imgP;
  for (int v : A)
    if (!used[v]) Aprime.push_back(v);
  for (int u : Pp) imgP.push_back(map[u]);
  std::vector<int> leaf_of(n, -1);
  for (int u : Pp)
    for (int c : children[u])
      if (leaf[c]) leaf_of[u] = c;
  if (!Pp.empty()) {
    Matching m;
    try {
      m = hall_cover_matching(h, imgP, Aprime);
    } catch (const PreconditionError&) {
      m = bipartite_max_matching(h, imgP, Aprime);
    }
    auto mate = m.mates(h.n());
    for (int u : Pp) {
      int a = mate[map[u]];
      if (a < 0) {
        EmbedOutcome o;
        o.strategy = "leaf-matching";
        o.detail = "no matching of phi(P') into A' covers " + std::to_string(u);
        return o;
      }
      place(leaf_of[u], a);
    }
  }
  // remaining leaves of W': O1 ones into A, O2 ones anywhere
  for (int pass = 1; pass <= 2; ++pass)
    for (int x = 0; x < n; ++x) {
      if (map[x] >= 0 || side[x] != pass) continue;
      int p = fg.neighbors(x)[0];
      if (map[p] < 0) continue;
      int v = free_neighbor(h, map[p], used, pass == 1 ? &mA : nullptr);
      if (v < 0) {
        EmbedOutcome o;
        o.strategy = "leaf-matching";
        o.detail = "no room for leaf " + std::to_string(x);
        return o;
      }
      place(x, v);
    }
  for (int x = 0; x < n; ++x)
    if (map[x] < 0) throw InternalError("embed_with_leaf_matching: vertex " + std::to_string(x) + " left unplaced");
  auto chk = validate_embedding(h, fg, map);
  if (!chk.ok) throw InternalError("embed_with_leaf_matching: " + chk.violation);
  return found(std::move(map), "leaf-matching", placed);
}

// ---------------------------------------------------------------- backtracking

namespace {

using Clock = std::chrono::steady_clock;

struct SearchPlan {
  std::vector<int> order;  // pattern vertices, BFS from order[0]
  std::vector<int> par;    // BFS parent
  std::vector<int> need;   // pattern degree
  std::vector<int> kids;   // children in the BFS tree
};

SearchPlan make_plan(const RootedTree& t) {
  int n = t.n();
  SearchPlan p;
  int start = 0;
  for (int x = 1; x < n; ++x)
    if (t.degree(x) > t.degree(start)) start = x;
  p.par.assign(n, -1);
  p.need.assign(n, 0);
  p.kids.assign(n, 0);
  std::vector<char> seen(n, 0);
  p.order.push_back(start);
  seen[start] = 1;
  for (size_t i = 0; i < p.order.size(); ++i) {
    int x = p.order[i];
    for (int y : t.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        p.par[y] = x;
        ++p.kids[x];
        p.order.push_back(y);
      }
  }
  for (int x = 0; x < n; ++x) p.need[x] = t.degree(x);
  return p;
}

enum RootResult : int { kPending = 0, kNone = 1, kHit = 2, kAborted = 3 };

class Searcher {
 public:
  Searcher(const Graph& g, const SearchPlan& plan, Clock::time_point deadline, const std::atomic<int>* best_root,
           std::atomic<bool>* timed_out)
      : g_(g), plan_(plan), deadline_(deadline), best_(best_root), timed_out_(timed_out) {}

  // kHit fills map; kAborted when cut off by timeout or a lower root succeeding.
  RootResult run(int root_image) {
    int n = static_cast<int>(plan_.order.size());
    map_.assign(n, -1);
    used_.assign(g_.n(), 0);
    resid_.resize(g_.n());
    for (int v = 0; v < g_.n(); ++v) resid_[v] = g_.degree(v);
    root_ = root_image;
    aborted_ = false;
    int x0 = plan_.order[0];
    if (g_.degree(root_image) < plan_.need[x0]) return kNone;
    place(x0, root_image);
    bool ok = extend(1);
    if (ok) return kHit;
    return aborted_ ? kAborted : kNone;
  }

  const std::vector<int>& map() const { return map_; }
  long long nodes() const { return nodes_; }

 private:
  void place(int x, int v) {
    map_[x] = v;
    used_[v] = 1;
    for (int w : g_.neighbors(v)) --resid_[w];
  }
  void unplace(int x, int v) {
    map_[x] = -1;
    used_[v] = 0;
    for (int w : g_.neighbors(v)) ++resid_[w];
  }

  bool should_stop() {
    if ((nodes_ & 1023) == 0) {
      if (Clock::now() >= deadline_) {
        if (timed_out_) timed_out_->store(true);
        local_timeout_ = true;
      }
    }
    if (local_timeout_ || (timed_out_ && timed_out_->load(std::memory_order_relaxed))) return true;
    return best_ && best_->load(std::memory_order_relaxed) < root_;
  }

  bool extend(size_t i) {
    if (i == plan_.order.size()) return true;
    ++nodes_;
    if (should_stop()) {
      aborted_ = true;
      return false;
    }
    int x = plan_.order[i];
    int host_par = map_[plan_.par[x]];
    std::vector<int> cand;
    for (int w : g_.neighbors(host_par))
      if (!used_[w] && g_.degree(w) >= plan_.need[x] && resid_[w] >= plan_.kids[x]) cand.push_back(w);
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return resid_[a] > resid_[b]; });
    for (int w : cand) {
      place(x, w);
      if (extend(i + 1)) return true;
      unplace(x, w);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const SearchPlan& plan_;
  Clock::time_point deadline_;
  const std::atomic<int>* best_;
  std::atomic<bool>* timed_out_;
  std::vector<int> map_, resid_;
  std::vector<char> used_;
  int root_ = 0;
  bool aborted_ = false, local_timeout_ = false;
  long long nodes_ = 0;
};

EmbedOutcome finish(const Graph& g, const RootedTree& t, const std::vector<int>& status,
                    const std::vector<std::vector<int>>& maps, long long nodes, const char* strategy) {
  EmbedOutcome o;
  o.strategy = strategy;
  o.nodes = nodes;
  for (size_t v = 0; v < status.size(); ++v) {
    if (status[v] == kHit) {
      o.status = EmbedStatus::Found;
      o.embedding.map = maps[v];
      auto chk = validate_embedding(g, t, o.embedding.map);
      if (!chk.ok) throw InternalError(std::string(strategy) + ": " + chk.violation);
      return o;
    }
    if (status[v] == kAborted || status[v] == kPending) {
      o.status = EmbedStatus::Timeout;
      o.detail = "search cut off before root image " + std::to_string(v) + " was settled";
      return o;
    }
  }
  o.status = EmbedStatus::NotFound;
  return o;
}

}  // namespace

EmbedOutcome backtracking_embed_serial(const Graph& g, const RootedTree& t, long long timeout_ms) {
  if (t.n() == 0) throw InputError("backtracking_embed: empty pattern");
  auto plan = make_plan(t);
  auto deadline = Clock::now() + std::chrono::milliseconds(timeout_ms);
  std::vector<int> status(g.n(), kPending);
  std::vector<std::vector<int>> maps(g.n());
  Searcher s(g, plan, deadline, nullptr, nullptr);
  for (int v = 0; v < g.n(); ++v) {
    status[v] = s.run(v);
    if (status[v] == kHit) {
      maps[v] = s.map();
      break;
    }
    if (status[v] == kAborted) break;
  }
  return finish(g, t, status, maps, s.nodes(), "backtracking-serial");
}

EmbedOutcome backtracking_embed(const Graph& g, const RootedTree& t, long long timeout_ms, int threads) {
  if (threads == 1) {
    auto o = backtracking_embed_serial(g, t, timeout_ms);
    o.strategy = "backtracking";
    return o;
  }
  if (t.n() == 0) throw InputError("backtracking_embed: empty pattern");
  auto plan = make_plan(t);
  auto deadline = Clock::now() + std::chrono::milliseconds(timeout_ms);
  int n = g.n();
  std::vector<int> status(n, kPending);
  std::vector<std::vector<int>> maps(n);
  std::atomic<int> best{INT_MAX};
  std::atomic<bool> timed_out{false};
  long long nodes = 0;
  int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt) reduction(+ : nodes)
  {
    Searcher s(g, plan, deadline, &best, &timed_out);
#pragma omp for schedule(dynamic, 1)
    for (int v = 0; v < n; ++v) {
      if (v > best.load() || timed_out.load()) {
        status[v] = kAborted;
        continue;
      }
      auto r = s.run(v);
      status[v] = r;
      if (r == kHit) {
        maps[v] = s.map();
        int cur = best.load();
        while (v < cur && !best.compare_exchange_weak(cur, v)) {
        }
      }
    }
    nodes += s.nodes();
  }
  // roots above the winner were cut off on purpose; only lower ones matter
  return finish(g, t, status, maps, nodes, "backtracking");
}

}  // namespace lks

#include "lks/tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <string>

namespace lks {

RootedTree::RootedTree(std::vector<int> parent) : parent_(std::move(parent)) {
  int n = static_cast<int>(parent_.size());
  if (n == 0) throw InputError("tree must have at least one vertex");
  children_.assign(n, {});
  nbrs_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    int p = parent_[v];
    if (p == -1) {
      if (root_ != -1) throw InputError("tree has more than one root");
      root_ = v;
    } else if (p < 0 || p >= n || p == v) {
      throw InputError("bad parent entry for vertex " + std::to_string(v));
    } else {
      children_[p].push_back(v);
      nbrs_[p].push_back(v);
      nbrs_[v].push_back(p);
    }
  }
  if (root_ == -1) throw InputError("tree has no root");
  for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
  depth_.assign(n, 0);
  order_.clear();
  order_.reserve(n);
  order_.push_back(root_);
  for (size_t i = 0; i < order_.size(); ++i)
    for (int c : children_[order_[i]]) {
      depth_[c] = depth_[order_[i]] + 1;
      order_.push_back(c);
    }
  if (static_cast<int>(order_.size()) != n) throw InputError("parent array is not a tree (cycle or disconnected)");
  size_.assign(n, 1);
  for (int i = n - 1; i > 0; --i) size_[parent_[order_[i]]] += size_[order_[i]];
}

RootedTree RootedTree::from_edges(int n, const std::vector<std::pair<int, int>>& edges, int root) {
  if (static_cast<int>(edges.size()) != n - 1) throw InputError("a tree on n vertices has n-1 edges");
  return from_graph(build_graph(n, edges), root);
}

RootedTree RootedTree::from_graph(const Graph& g, int root) {
  int n = g.n();
  if (root < 0 || root >= n) throw InputError("root out of range");
  if (g.m() != n - 1) throw InputError("graph is not a tree (edge count)");
  std::vector<int> par(n, -2);
  par[root] = -1;
  std::vector<int> q{root};
  for (size_t i = 0; i < q.size(); ++i)
    for (int w : g.neighbors(q[i]))
      if (par[w] == -2) {
        par[w] = q[i];
        q.push_back(w);
      }
  if (static_cast<int>(q.size()) != n) throw InputError("graph is not a tree (disconnected)");
  return RootedTree(par);
}

bool RootedTree::below(int a, int b) const {
  if (depth_[a] < depth_[b]) return false;
  while (depth_[a] > depth_[b]) a = parent_[a];
  return a == b;
}

int RootedTree::distance(int a, int b) const {
  int d = 0;
  while (a != b) {
    if (depth_[a] >= depth_[b]) {
      a = parent_[a];
    } else {
      b = parent_[b];
    }
    ++d;
  }
  return d;
}

std::vector<std::pair<int, int>> RootedTree::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n(); ++v)
    if (parent_[v] >= 0) e.emplace_back(std::min(v, parent_[v]), std::max(v, parent_[v]));
  std::sort(e.begin(), e.end());
  return e;
}

Graph RootedTree::to_graph() const { return build_graph(n(), edges()); }

RootedTree RootedTree::rerooted(int r) const {
  if (r < 0 || r >= n()) throw InputError("root out of range");
  return from_graph(to_graph(), r);
}

VertexSet RootedTree::subtree_vertices(int v) const {
  VertexSet out{v};
  for (size_t i = 0; i < out.size(); ++i)
    for (int c : children_[out[i]]) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet RootedTree::leaves() const {
  VertexSet out;
  for (int v = 0; v < n(); ++v)
    if (degree(v) == 1) out.push_back(v);
  return out;
}

VertexSet RootedTree::rooted_leaves() const {
  VertexSet out;
  for (int v = 0; v < n(); ++v)
    if (v != root_ && children_[v].empty()) out.push_back(v);
  return out;
}

ColorStats color_stats(const RootedTree& t) {
  VertexSet even, odd;
  for (int v = 0; v < t.n(); ++v) (t.depth(v) % 2 == 0 ? even : odd).push_back(v);
  ColorStats cs;
  if (even.size() >= odd.size()) {
    cs.Te = std::move(even);
    cs.To = std::move(odd);
  } else {
    cs.Te = std::move(odd);
    cs.To = std::move(even);
  }
  cs.gap = static_cast<int>(cs.Te.size() - cs.To.size());
  return cs;
}

namespace {

// Maximum independent set size of the forest induced by `alive`.
int forest_mis(const RootedTree& t, const std::vector<char>& alive) {
  int n = t.n();
  std::vector<int> in(n, 0), out(n, 0);
  int total = 0;
  const auto& order = t.bfs_order();
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    if (!alive[v]) continue;
    in[v] += 1;
    int best = std::max(in[v], out[v]);
    int p = t.parent(v);
    if (p >= 0 && alive[p]) {
      out[p] += best;
      in[p] += out[v];
    } else {
      total += best;
    }
  }
  return total;
}

struct Bnb {
  const RootedTree& t;
  std::vector<int> order;  // decision order, deepest first
  std::vector<char> alive;  // undecided
  std::vector<int> cur, best;
  int upper = 0;

  void run(size_t pos) {
    if (static_cast<int>(best.size()) == upper) return;
    while (pos < order.size() && !alive[order[pos]]) ++pos;
    if (pos == order.size()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    if (static_cast<int>(cur.size()) + forest_mis(t, alive) <= static_cast<int>(best.size())) return;
    int v = order[pos];
    // take v
    std::vector<int> killed{v};
    alive[v] = 0;
    for (int w : t.neighbors(v))
      if (alive[w]) {
        alive[w] = 0;
        killed.push_back(w);
      }
    cur.push_back(v);
    run(pos + 1);
    cur.pop_back();
    for (int w : killed) alive[w] = 1;
    // skip v
    alive[v] = 0;
    run(pos + 1);
    alive[v] = 1;
  }
};

}  // namespace

SemiPartition discrepancy(const RootedTree& t) {
  int n = t.n();
  if (n < 2) throw PreconditionError("discrepancy needs a tree with at least two vertices");
  VertexSet u2;
  if (n <= 20) {
    std::vector<unsigned> nb(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w : t.neighbors(v)) nb[v] |= 1u << w;
    // Largest independent set first; disc = 2|U2| - n falls with |U2|.
    for (int s = n - 1; s >= (n + 1) / 2 && u2.empty(); --s) {
      unsigned mask = (1u << s) - 1, limit = 1u << n;
      while (mask < limit) {
        bool ok = true;
        for (unsigned m = mask; m && ok; m &= m - 1)
          if (nb[__builtin_ctz(m)] & mask) ok = false;
        if (ok) {
          for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) u2.push_back(v);
          break;
        }
        unsigned c = mask & -mask, r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
    }
  } else {
    Bnb b{t, {}, std::vector<char>(n, 1), {}, {}, 0};
    b.order.assign(t.bfs_order().rbegin(), t.bfs_order().rend());
    b.upper = forest_mis(t, b.alive);
    b.run(0);
    u2 = normalized(b.best);
  }
  if (static_cast<int>(u2.size()) * 2 < n) throw InternalError("discrepancy: no semiindependent partition found");
  SemiPartition sp;
  auto in2 = mask_of(n, u2);
  for (int v = 0; v < n; ++v) (in2[v] ? sp.U2 : sp.U1).push_back(v);
  sp.disc = static_cast<int>(sp.U2.size()) - static_cast<int>(sp.U1.size());
  return sp;
}

SemiCheck check_semiindependent(const RootedTree& t, const VertexSet& U1, const VertexSet& U2) {
  int n = t.n();
  std::vector<int> side(n, 0);
  for (int v : U1) {
    if (v < 0 || v >= n || side[v]) throw InputError("U1/U2 is not a partition of V(T)");
    side[v] = 1;
  }
  for (int v : U2) {
    if (v < 0 || v >= n || side[v]) throw InputError("U1/U2 is not a partition of V(T)");
    side[v] = 2;
  }
  for (int v = 0; v < n; ++v)
    if (!side[v]) throw InputError("U1/U2 is not a partition of V(T)");
  SemiCheck c;
  c.independent = true;
  for (auto [a, b] : t.edges())
    if (side[a] == 2 && side[b] == 2) c.independent = false;
  c.size_ok = U1.size() <= U2.size();
  c.semiindependent = c.independent && c.size_ok;
  for (int v : t.leaves()) (side[v] == 2 ? c.leaves_in_U2 : c.leaves_in_U1)++;
  return c;
}

FullSubtree full_subtree(const RootedTree& t, FullSubtreeMode mode, int target) {
  int n = t.n();
  const auto& order = t.bfs_order();
  std::vector<int> lf(n, 0);  // rooted leaves in the subtree of v, v included
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    if (v != t.root() && t.children(v).empty()) lf[v] = 1;
    if (t.parent(v) >= 0) lf[t.parent(v)] += lf[v];
  }
  auto weight = [&](int c) { return mode == FullSubtreeMode::ByOrder ? t.subtree_size(c) : lf[c]; };
  int avail = mode == FullSubtreeMode::ByOrder ? n : lf[t.root()];
  if (target <= 0 || target > avail)
    throw PreconditionError("full_subtree: target " + std::to_string(target) + " outside (0, " + std::to_string(avail) + "]");

  FullSubtree f;
  int y = t.root();
  while (true) {
    int whole = weight(y);
    if (whole <= target) {
      f.root = y;
      f.children = t.children(y);
      break;
    }
    int big = -1;
    for (int c : t.children(y))
      if (2 * weight(c) >= target) {
        big = c;
        break;
      }
    if (big >= 0) {
      if (t.children(big).empty() && (mode == FullSubtreeMode::ByLeaves || target >= 2)) {
        f.root = y;
        f.children = {big};
        break;
      }
      y = big;
      continue;
    }
    // Every child is light: take children while the total stays within target.
    int acc = mode == FullSubtreeMode::ByOrder ? 1 : 0;
    for (int c : t.children(y))
      if (acc + weight(c) <= target) {
        acc += weight(c);
        f.children.push_back(c);
      }
    f.root = y;
    break;
  }
  f.vertices = {f.root};
  for (int c : f.children) {
    auto sub = t.subtree_vertices(c);
    f.vertices.insert(f.vertices.end(), sub.begin(), sub.end());
  }
  std::sort(f.vertices.begin(), f.vertices.end());
  f.order = static_cast<int>(f.vertices.size());
  f.leaves = 0;
  for (int c : f.children) f.leaves += lf[c];
  return f;
}

bool is_full_subtree(const RootedTree& t, const FullSubtree& f) {
  if (f.root < 0 || f.root >= t.n()) return false;
  VertexSet expect{f.root};
  std::vector<char> seen(t.n(), 0);
  for (int c : f.children) {
    if (c < 0 || c >= t.n() || t.parent(c) != f.root || seen[c]) return false;
    seen[c] = 1;
    auto sub = t.subtree_vertices(c);
    expect.insert(expect.end(), sub.begin(), sub.end());
  }
  if (f.children.empty() && !(t.children(f.root).empty())) return false;
  std::sort(expect.begin(), expect.end());
  if (expect != f.vertices || f.order != static_cast<int>(expect.size())) return false;
  int leaves = 0;
  for (int v : expect)
    if (v != f.root && t.children(v).empty()) ++leaves;
  return leaves == f.leaves;
}

bool c_balanced(const RootedTree& t, const std::vector<VertexSet>& family, const Rational& c, long long k) {
  if (c <= Rational(0) || c >= Rational(1, 2)) throw InputError("c_balanced: c must lie in (0, 1/2)");
  std::vector<char> used(t.n(), 0);
  Rational mass(0);
  for (const auto& member : family) {
    if (member.empty()) throw InputError("c_balanced: empty member");
    auto in = mask_of(t.n(), member);
    int inner = 0, even = 0;
    for (int v : member) {
      if (used[v]) throw InputError("c_balanced: members overlap");
      used[v] = 1;
      if (t.parent(v) >= 0 && in[t.parent(v)]) ++inner;
      even += t.depth(v) % 2 == 0;
    }
    int size = static_cast<int>(member.size());
    if (inner != size - 1) throw InputError("c_balanced: member is not a subtree");
    int small = std::min(even, size - even);
    if (Rational(small) > c * Rational(size)) mass += Rational(size);
  }
  return mass >= c * Rational(k);
}

std::vector<VertexSet> induced_path_family(const RootedTree& t, int c) {
  if (c < 2) throw InputError("induced_path_family: c must be at least 2");
  int n = t.n();
  std::vector<VertexSet> family;
  std::vector<char> covered(n, 0);
  auto pack = [&](const VertexSet& chain) {
    size_t i = 0;
    while (i + static_cast<size_t>(c) < chain.size()) {
      bool free = true;
      for (size_t j = i; j <= i + c; ++j)
        if (covered[chain[j]]) free = false;
      if (!free) {
        ++i;
        continue;
      }
      VertexSet p(chain.begin() + i, chain.begin() + i + c + 1);
      for (int v : p) covered[v] = 1;
      family.push_back(std::move(p));
      i += c + 1;
    }
  };
  // Chains run between vertices of degree != 2 through degree-2 vertices.
  for (int x = 0; x < n; ++x) {
    if (t.degree(x) == 2) continue;
    for (int first : t.neighbors(x)) {
      VertexSet chain{x};
      int prev = x, cur = first;
      while (t.degree(cur) == 2) {
        chain.push_back(cur);
        int nxt = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
      }
      chain.push_back(cur);
      if (x < cur) pack(chain);
    }
  }
  return family;
}

bool is_maximal_induced_path_family(const RootedTree& t, int c, const std::vector<VertexSet>& family) {
  int n = t.n();
  std::vector<char> covered(n, 0);
  for (const auto& p : family) {
    if (static_cast<int>(p.size()) != c + 1) return false;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= n || covered[p[i]]) return false;
      covered[p[i]] = 1;
      if (i + 1 < p.size() && t.parent(p[i]) != p[i + 1] && t.parent(p[i + 1]) != p[i]) return false;
      if (i > 0 && i + 1 < p.size() && t.degree(p[i]) != 2) return false;
    }
  }
  // No further path fits in the uncovered part: walk from every start.
  for (int a = 0; a < n; ++a) {
    if (covered[a]) continue;
    for (int first : t.neighbors(a)) {
      int prev = a, cur = first, len = 1;
      bool ok = true;
      while (len < c + 1) {
        if (covered[cur]) {
          ok = false;
          break;
        }
        ++len;
        if (len == c + 1) break;
        if (t.degree(cur) != 2) {
          ok = false;
          break;
        }
        int nxt = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
      }
      if (ok && len == c + 1) return false;
    }
  }
  return true;
}

RootedTree prufer_decode(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw InputError("bad Prufer entry");
    ++deg[x];
  }
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --deg[leaf];
    --deg[x];
  }
  int u = -1, v = -1;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 1) (u < 0 ? u : v) = i;
  edges.emplace_back(u, v);
  return RootedTree::from_edges(n, edges, 0);
}

long long labeled_tree_count(int order) {
  if (order <= 2) return 1;
  long long c = 1;
  for (int i = 0; i < order - 2; ++i) c *= order;
  return c;
}

namespace {

std::string ahu(const std::vector<std::vector<int>>& nb, int v, int from) {
  std::vector<std::string> parts;
  for (int w : nb[v])
    if (w != from) parts.push_back(ahu(nb, w, v));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (auto& p : parts) s += p;
  return s + ")";
}

VertexSet centroids(const std::vector<std::vector<int>>& nb) {
  int n = static_cast<int>(nb.size());
  std::vector<int> par(n, -1), order{0}, size(n, 1);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : nb[order[i]])
      if (!seen[w]) {
        seen[w] = 1;
        par[w] = order[i];
        order.push_back(w);
      }
  for (int i = n - 1; i > 0; --i) size[par[order[i]]] += size[order[i]];
  VertexSet out;
  for (int v = 0; v < n; ++v) {
    int worst = n - size[v];
    for (int w : nb[v])
      if (w != par[v]) worst = std::max(worst, size[w]);
    if (2 * worst <= n) out.push_back(v);
  }
  return out;
}

std::pair<std::string, int> canonical_with_root(const RootedTree& t) {
  std::vector<std::vector<int>> nb(t.n());
  for (int v = 0; v < t.n(); ++v) nb[v] = t.neighbors(v);
  std::string best;
  int root = -1;
  for (int c : centroids(nb)) {
    auto s = ahu(nb, c, -1);
    if (root < 0 || s < best) {
      best = s;
      root = c;
    }
  }
  return {best, root};
}

RootedTree relabel_bfs(const RootedTree& t, int root) {
  auto g = t.to_graph();
  std::vector<int> id(t.n(), -1), order{root};
  id[root] = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : g.neighbors(order[i]))
      if (id[w] < 0) {
        id[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
  std::vector<int> par(t.n(), -1);
  for (size_t i = 1; i < order.size(); ++i) {
    int v = order[i];
    int p = -1;
    for (int w : g.neighbors(v))
      if (id[w] < id[v] && (p < 0 || id[w] < id[p])) p = w;
    par[id[v]] = id[p];
  }
  return RootedTree(par);
}

std::mutex g_cache_mu;
std::map<int, std::vector<RootedTree>> g_canonical_cache;

const std::vector<RootedTree>& canonical_trees(int order) {
  std::lock_guard<std::mutex> lock(g_cache_mu);
  auto it = g_canonical_cache.find(order);
  if (it != g_canonical_cache.end()) return it->second;
  std::vector<RootedTree> level{RootedTree(std::vector<int>{-1})};
  int have = 1;
  for (auto& [o, trees] : g_canonical_cache)
    if (o <= order && o > have) {
      have = o;
      level = trees;
    }
  for (int n = have + 1; n <= order; ++n) {
    std::map<std::string, RootedTree> next;
    for (const auto& t : level) {
      for (int v = 0; v < t.n(); ++v) {
        auto par = t.parents();
        par.push_back(v);
        RootedTree grown(par);
        auto [key, root] = canonical_with_root(grown);
        if (!next.count(key)) next.emplace(key, relabel_bfs(grown, root));
      }
    }
    level.clear();
    for (auto& [k, t] : next) level.push_back(t);
    g_canonical_cache.emplace(n, level);
  }
  if (order == 1) g_canonical_cache.emplace(1, level);
  return g_canonical_cache.at(order);
}

}  // namespace

std::string canonical_form(const RootedTree& t) { return canonical_with_root(t).first; }

void for_each_tree(int order, TreeGenMode mode, const std::function<void(const RootedTree&)>& fn) {
  if (order < 1 || order > 16) throw InputError("generate_trees: order must be in [1, 16]");
  if (mode == TreeGenMode::Labeled) {
    if (order > 10) throw InputError("generate_trees: labeled mode is capped at order 10");
    if (order == 1) {
      fn(RootedTree(std::vector<int>{-1}));
      return;
    }
    std::vector<int> seq(order - 2, 0);
    while (true) {
      fn(prufer_decode(seq));
      int i = order - 3;
      while (i >= 0 && seq[i] == order - 1) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
    return;
  }
  for (const auto& t : canonical_trees(order)) fn(t);
}

std::vector<RootedTree> generate_trees(int order, TreeGenMode mode) {
  std::vector<RootedTree> out;
  for_each_tree(order, mode, [&](const RootedTree& t) { out.push_back(t); });
  return out;
}

}  // namespace lks

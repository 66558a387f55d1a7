#include "lks/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace lks {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.assign(n, {});
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n())
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n()) + ")");
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

int Graph::min_degree() const {
  int d = n() == 0 ? 0 : degree(0);
  for (int v = 1; v < n(); ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
  if (it != adj_[u].end() && *it == v) return false;
  adj_[u].insert(it, v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return false;
  adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
  adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
  --m_;
  return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& vs) const {
  std::vector<int> pos(n(), -1);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
    check_vertex(vs[i]);
    pos[vs[i]] = i;
  }
  Graph h(static_cast<int>(vs.size()));
  for (int i = 0; i < static_cast<int>(vs.size()); ++i)
    for (int w : adj_[vs[i]])
      if (pos[w] > i) h.add_edge(i, pos[w]);
  return h;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  // sorted insertion appends to every adjacency list
  std::vector<std::pair<int, int>> sorted;
  sorted.reserve(edges.size());
  for (auto [u, v] : edges) sorted.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(sorted.begin(), sorted.end());
  for (auto [u, v] : sorted) g.add_edge(u, v);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

std::vector<char> mask_of(int n, const VertexSet& s) {
  std::vector<char> m(n, 0);
  for (int v : s) {
    if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    m[v] = 1;
  }
  return m;
}

VertexSet all_vertices(int n) {
  VertexSet v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

int degree_into(const Graph& g, int v, const std::vector<char>& mask) {
  int d = 0;
  for (int w : g.neighbors(v)) d += mask[w];
  return d;
}

long long edge_count(const Graph& g, const VertexSet& X, const VertexSet& Y) {
  auto ym = mask_of(g.n(), Y);
  long long e = 0;
  for (int x : X) {
    if (x < 0 || x >= g.n()) throw InputError("vertex out of range");
    e += degree_into(g, x, ym);
  }
  return e;
}

Rational avg_deg(const Graph& g, const VertexSet& X, const VertexSet& Y) {
  if (X.empty()) throw InputError("avg_deg: empty X");
  auto xs = normalized(X), ys = normalized(Y);
  if (xs.size() != X.size() || ys.size() != Y.size()) throw InputError("avg_deg: repeated vertex");
  if (static_cast<int>(ys.size()) != g.n()) {
    std::vector<int> common;
    std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(common));
    if (!common.empty()) throw InputError("avg_deg: X and Y overlap and Y is not V");
  }
  return Rational(edge_count(g, xs, ys), static_cast<long long>(xs.size()));
}

Rational avg_deg(const Graph& g, const VertexSet& X) { return avg_deg(g, X, all_vertices(g.n())); }

LksClassification classify_lks(const Graph& g, int k) {
  if (k < 1 || k >= g.n())
    throw InputError("classify_lks: need 1 <= k < n (k=" + std::to_string(k) + ", n=" + std::to_string(g.n()) + ")");
  LksClassification c;
  c.k = k;
  c.large.assign(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) >= k) {
      c.L.push_back(v);
      c.large[v] = 1;
    } else {
      c.S.push_back(v);
    }
  }
  c.holds = 2 * static_cast<long long>(c.L.size()) >= g.n();
  return c;
}

Graph normalize_host(const Graph& g, int k) {
  auto cls = classify_lks(g, k);
  if (!cls.holds) throw PreconditionError("normalize_host: graph does not have the LKS property for k=" + std::to_string(k));
  Graph h = g;
  // One deletion at a time, reclassifying after each.
  while (true) {
    cls = classify_lks(h, k);
    if (cls.L.size() < cls.S.size() + 2) break;
    bool removed = false;
    for (int u : cls.L) {
      for (int w : h.neighbors(u)) {
        if (!cls.large[w]) {
          h.remove_edge(u, w);
          removed = true;
          break;
        }
      }
      if (removed) break;
    }
    if (!removed) break;
  }
  cls = classify_lks(h, k);
  for (int u : cls.S)
    for (int w : std::vector<int>(h.neighbors(u)))
      if (!cls.large[w]) h.remove_edge(u, w);
  auto after = classify_lks(h, k);
  if (!after.holds) throw InternalError("normalize_host lost the LKS property");
  return h;
}

Core min_degree_core(const Graph& g, const Rational& d) {
  if (d < Rational(0)) throw InputError("min_degree_core: negative threshold");
  int n = g.n();
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  std::queue<int> q;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (Rational(deg[v]) < d) {
      alive[v] = 0;
      q.push(v);
    }
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (!alive[w]) continue;
      if (Rational(--deg[w]) < d) {
        alive[w] = 0;
        q.push(w);
      }
    }
  }
  Core c;
  for (int v = 0; v < n; ++v)
    if (alive[v]) c.vertices.push_back(v);
  c.graph = g.induced(c.vertices);
  return c;
}

long long ci(double x) {
  double f = std::floor(x);
  return static_cast<long long>(x - f < 0.5 ? f : std::ceil(x));
}

long long ci(const Rational& x) {
  long long f = x.floor();
  return x - Rational(f) < Rational(1, 2) ? f : x.ceil();
}

}  // namespace lks

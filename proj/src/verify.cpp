#include "lks/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <limits>

#include "lks/embed.hpp"

namespace lks {

namespace {

using Clock = std::chrono::steady_clock;

// Runs fn(shard) for every shard; serial when threads == 1. Exceptions from a
// worker are rethrown after the loop, lowest shard first.
void for_shards(int shards, int threads, const std::function<void(int)>& fn) {
  std::vector<std::exception_ptr> err(shards);
  if (threads == 1) {
    for (int s = 0; s < shards; ++s) fn(s);
    return;
  }
  int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (int s = 0; s < shards; ++s) {
    try {
      fn(s);
    } catch (...) {
      err[s] = std::current_exception();
    }
  }
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
}

// min degree >= order-1 means a greedy embedding exists for every tree.
bool has_core(const Graph& g, int d) {
  int n = g.n();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < d) {
      gone[v] = 1;
      stack.push_back(v);
    }
  }
  int left = n - static_cast<int>(stack.size());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!gone[w] && --deg[w] < d) {
        gone[w] = 1;
        --left;
        stack.push_back(w);
      }
  }
  return left > 0;
}

bool universal(const Graph& host, int order, const std::vector<RootedTree>& trees) {
  if (order > host.n()) return false;
  if (order == 1) return true;
  if (host.max_degree() < order - 1) return false;  // the star fails
  if (has_core(host, order - 1)) return true;
  for (const auto& t : trees) {
    auto out = backtracking_embed_serial(host, t, std::numeric_limits<int>::max());
    if (out.status == EmbedStatus::Timeout) throw InternalError("is_tree_universal: backtracking timed out");
    if (!out.found()) return false;
  }
  return true;
}

Graph graph_from_mask(int n, unsigned long long mask) {
  std::vector<std::pair<int, int>> e;
  int i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++i)
      if (mask >> i & 1ULL) e.emplace_back(u, v);
  return build_graph(n, e);
}

void check_graph(const Graph& g, const std::vector<int>& ks, const std::vector<std::vector<RootedTree>>& trees,
                 const VerifyOptions& opt, VerifyReport& rep) {
  ++rep.graphs;
  int n = g.n();
  for (int k : ks) {
    // degree-sum rejection before the full classification
    int large = 0;
    for (int v = 0; v < n; ++v) large += g.degree(v) >= k;
    if (2 * large < n) continue;
    if (!classify_lks(g, k).holds) throw InternalError("lks_verify: degree count disagrees with classify_lks");
    ++rep.lks_graphs;
    DispatchOptions d;
    d.threads = 1;
    d.timeout_ms = opt.timeout_ms;
    for (const auto& t : trees[k]) {
      ++rep.checks;
      auto out = embed_tree(g, t, k, d);
      if (out.found()) {
        ++rep.strategies[out.strategy];
        continue;
      }
      if (out.status == EmbedStatus::Timeout) throw InternalError("lks_verify: embedding search timed out");
      // re-verify with a fresh exhaustive search before reporting
      auto again = backtracking_embed_serial(g, t, std::numeric_limits<int>::max());
      if (again.found()) throw InternalError("lks_verify: dispatcher missed an embedding");
      rep.counterexamples.push_back({g, k, t});
    }
  }
}

std::vector<int> verify_ks(int n, const VerifyOptions& opt) {
  std::vector<int> ks;
  if (opt.k) {
    if (*opt.k < 1 || *opt.k >= n) throw InputError("lks_verify: k must lie in [1, n)");
    ks.push_back(*opt.k);
  } else {
    for (int k = 1; k < n; ++k) ks.push_back(k);
  }
  return ks;
}

std::vector<std::vector<RootedTree>> trees_for(const std::vector<int>& ks) {
  int top = ks.empty() ? 0 : *std::max_element(ks.begin(), ks.end());
  std::vector<std::vector<RootedTree>> trees(top + 1);
  for (int k : ks) trees[k] = generate_trees(k + 1, TreeGenMode::Canonical);
  return trees;
}

}  // namespace

int Coloring::edge_index(int m, int u, int v) {
  if (u > v) std::swap(u, v);
  return u * (2 * m - u - 1) / 2 + (v - u - 1);
}

Graph Coloring::red_graph() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (is_red(u, v)) e.emplace_back(u, v);
  return build_graph(m, e);
}

Graph Coloring::blue_graph() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (!is_red(u, v)) e.emplace_back(u, v);
  return build_graph(m, e);
}

void VerifyReport::merge(const VerifyReport& o) {
  graphs += o.graphs;
  lks_graphs += o.lks_graphs;
  checks += o.checks;
  counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
  for (const auto& [s, c] : o.strategies) strategies[s] += c;
}

VerifyReport lks_verify(int n, const VerifyOptions& opt) {
  if (n < 1) throw InputError("lks_verify: n must be positive");
  if (n > 7 || (n == 7 && !opt.allow_n7))
    throw InputError("lks_verify: exhaustive enumeration is capped at n <= 6 (n = 7 behind allow_n7)");
  auto start = Clock::now();
  VerifyReport rep;
  rep.n = n;
  rep.ks = verify_ks(n, opt);
  auto trees = trees_for(rep.ks);
  int E = n * (n - 1) / 2;
  int b = std::clamp(opt.shard_bits, 0, E);
  int shards = 1 << b;
  unsigned long long per = 1ULL << (E - b);
  std::vector<VerifyReport> parts(shards);
  for_shards(shards, opt.threads, [&](int s) {
    unsigned long long lo = static_cast<unsigned long long>(s) * per;
    for (unsigned long long mask = lo; mask < lo + per; ++mask)
      check_graph(graph_from_mask(n, mask), rep.ks, trees, opt, parts[s]);
  });
  for (const auto& p : parts) rep.merge(p);
  rep.shards = shards;
  rep.threads = opt.threads == 1 ? 1 : (opt.threads > 0 ? opt.threads : omp_get_max_threads());
  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

VerifyReport lks_verify_graphs(const std::vector<Graph>& graphs, const VerifyOptions& opt) {
  auto start = Clock::now();
  VerifyReport rep;
  if (graphs.empty()) return rep;
  int n = graphs.front().n();
  for (const auto& g : graphs)
    if (g.n() != n) throw InputError("lks_verify: graph6 stream mixes orders");
  rep.n = n;
  rep.ks = verify_ks(n, opt);
  auto trees = trees_for(rep.ks);
  int shards = static_cast<int>(std::min<std::size_t>(graphs.size(), 64));
  std::vector<VerifyReport> parts(shards);
  for_shards(shards, opt.threads, [&](int s) {
    for (std::size_t i = s; i < graphs.size(); i += shards) check_graph(graphs[i], rep.ks, trees, opt, parts[s]);
  });
  for (const auto& p : parts) rep.merge(p);
  rep.shards = shards;
  rep.threads = opt.threads == 1 ? 1 : (opt.threads > 0 ? opt.threads : omp_get_max_threads());
  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

bool is_tree_universal(const Graph& host, int order) {
  if (order < 1) throw InputError("is_tree_universal: order must be positive");
  if (order > host.n()) return false;
  return universal(host, order, generate_trees(order, TreeGenMode::Canonical));
}

RamseyCheck ramsey_universal_check(int m, int l1, int l2, int threads) {
  if (m < 1 || m > 8) throw InputError("ramsey_universal_check: m must lie in [1, 8]");
  if (l1 < 1 || l2 < 1) throw InputError("ramsey_universal_check: l1, l2 must be positive");
  auto T1 = generate_trees(l1 + 1, TreeGenMode::Canonical);
  auto T2 = generate_trees(l2 + 1, TreeGenMode::Canonical);
  // Vertex 0's red neighbourhood is {1..d} up to relabeling; with l1 == l2 a
  // color swap also lets d stay in the lower half.
  int dmax = m - 1;
  if (l1 == l2) dmax = (m - 1) / 2;
  int rest = (m - 1) * (m - 2) / 2;
  int b = std::min(rest, 6);
  unsigned long long per = 1ULL << (rest - b);
  int shards = (dmax + 1) << b;
  constexpr long long kNone = std::numeric_limits<long long>::max();
  std::atomic<long long> first{kNone};  // smallest failing global index

  for_shards(shards, threads, [&](int s) {
    int d = s >> b;
    unsigned long long lo = static_cast<unsigned long long>(s & ((1 << b) - 1)) * per;
    long long base = static_cast<long long>(d) * (1LL << rest);
    Coloring c;
    c.m = m;
    c.red.assign(m * (m - 1) / 2, 0);
    for (int j = 1; j <= d; ++j) c.red[Coloring::edge_index(m, 0, j)] = 1;
    for (unsigned long long mask = lo; mask < lo + per; ++mask) {
      long long idx = base + static_cast<long long>(mask);
      if (idx >= first.load()) return;
      int i = 0;
      for (int u = 1; u < m; ++u)
        for (int v = u + 1; v < m; ++v, ++i) c.red[Coloring::edge_index(m, u, v)] = static_cast<char>(mask >> i & 1ULL);
      if (universal(c.red_graph(), l1 + 1, T1) || universal(c.blue_graph(), l2 + 1, T2)) continue;
      long long cur = first.load();
      while (idx < cur && !first.compare_exchange_weak(cur, idx)) {
      }
      return;
    }
  });

  RamseyCheck out;
  long long total = static_cast<long long>(dmax + 1) * (1LL << rest);
  long long f = first.load();
  if (f == kNone) {
    out.holds = true;
    out.colorings = total;
    return out;
  }
  out.colorings = f + 1;
  Coloring c;
  c.m = m;
  c.red.assign(m * (m - 1) / 2, 0);
  int d = static_cast<int>(f >> rest);
  unsigned long long mask = static_cast<unsigned long long>(f & ((1LL << rest) - 1));
  for (int j = 1; j <= d; ++j) c.red[Coloring::edge_index(m, 0, j)] = 1;
  int i = 0;
  for (int u = 1; u < m; ++u)
    for (int v = u + 1; v < m; ++v, ++i) c.red[Coloring::edge_index(m, u, v)] = static_cast<char>(mask >> i & 1ULL);
  out.witness = c;
  return out;
}

RamseyResult ramsey_number(int l1, int l2, int cap, int threads) {
  if (l1 < 1 || l2 < 1) throw InputError("ramsey_number: l1, l2 must be positive");
  if (cap > 8) throw InputError("ramsey_number: cap must be at most 8");
  if (l1 + l2 > cap) throw InputError("ramsey_number: l1 + l2 exceeds the cap");
  RamseyResult res;
  std::optional<Coloring> below;
  for (int m = 1; m <= cap; ++m) {
    auto chk = ramsey_universal_check(m, l1, l2, threads);
    res.colorings += chk.colorings;
    if (!chk.holds) {
      below = chk.witness;
      continue;
    }
    res.value = m;
    break;
  }
  if (res.value == 0) throw InternalError("ramsey_number: no m <= l1 + l2 works");
  if (!below) throw InternalError("ramsey_number: K_1 cannot be universal");
  res.witness = *below;
  int lo = std::max(l1, l2) + 1, hi = l1 + l2;
  bool odd = l1 % 2 == 1 || l2 % 2 == 1;
  if (res.value < lo || res.value > hi) throw InternalError("ramsey_number: value outside [max(l1,l2)+1, l1+l2]");
  if (odd && res.value != hi) throw InternalError("ramsey_number: value differs from l1+l2 with some l odd");
  if (!odd && res.value < hi - 1) throw InternalError("ramsey_number: value below l1+l2-1 with both l even");
  res.endpoint = odd ? "l1+l2" : (res.value == hi ? "l1+l2 (upper)" : "l1+l2-1 (lower)");
  res.construction = lower_bound_coloring(l1, l2);
  if (res.construction.m >= res.value) throw InternalError("ramsey_number: construction contradicts the enumeration");
  return res;
}

Coloring lower_bound_coloring(int l1, int l2) {
  if (l1 < 1 || l2 < 1) throw InputError("lower_bound_coloring: l1, l2 must be positive");
  bool odd = l1 % 2 == 1 || l2 % 2 == 1;
  int N = odd ? l1 + l2 - 1 : l1 + l2 - 2;
  int d = l1 - 1;
  if (d % 2 == 1 && N % 2 == 1) throw InternalError("lower_bound_coloring: odd degree on an odd order");
  Coloring c;
  c.m = N;
  c.red.assign(N * (N - 1) / 2, 0);
  std::vector<int> gens;
  for (int j = 1; j <= d / 2; ++j) gens.push_back(j);
  for (int u = 0; u < N; ++u) {
    for (int j : gens) c.red[Coloring::edge_index(N, u, (u + j) % N)] = 1;
    if (d % 2 == 1) c.red[Coloring::edge_index(N, u, (u + N / 2) % N)] = 1;
  }
  auto red = c.red_graph();
  for (int v = 0; v < N; ++v)
    if (red.degree(v) != d) throw InternalError("lower_bound_coloring: red graph is not regular");
  if (!star_free(c, l1, l2)) throw InternalError("lower_bound_coloring: coloring contains a forbidden star");
  return c;
}

bool star_free(const Coloring& c, int l1, int l2) {
  for (int v = 0; v < c.m; ++v) {
    int r = 0;
    for (int w = 0; w < c.m; ++w)
      if (w != v) r += c.is_red(v, w);
    if (r >= l1 || c.m - 1 - r >= l2) return false;
  }
  return true;
}

}  // namespace lks

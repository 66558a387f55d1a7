#include "lks/regularity.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace lks {

namespace {

void check_pair(const Graph& g, const VertexSet& A, const VertexSet& B, const char* who) {
  if (A.empty() || B.empty()) throw InputError(std::string(who) + ": empty side");
  std::vector<char> seen(g.n(), 0);
  for (const auto* side : {&A, &B})
    for (int v : *side) {
      if (v < 0 || v >= g.n()) throw InputError(std::string(who) + ": vertex " + std::to_string(v) + " out of range");
      if (seen[v]) throw InputError(std::string(who) + ": sides overlap or repeat vertex " + std::to_string(v));
      seen[v] = 1;
    }
}

long long cross_edges(const Graph& g, const VertexSet& X, const std::vector<char>& maskY) {
  long long e = 0;
  for (int x : X) e += degree_into(g, x, maskY);
  return e;
}

// |E/(a b) - e/(x y)| >= p/q, all integers nonnegative.
bool deviates(long long E, long long a, long long b, long long e, long long x, long long y, const Rational& eps) {
  __int128 lhs = static_cast<__int128>(E) * x * y - static_cast<__int128>(e) * a * b;
  if (lhs < 0) lhs = -lhs;
  return lhs * eps.den() >= static_cast<__int128>(eps.num()) * a * b * x * y;
}

}  // namespace

Rational pair_density(const Graph& g, const VertexSet& A, const VertexSet& B) {
  check_pair(g, A, B, "pair_density");
  auto mB = mask_of(g.n(), B);
  return Rational(cross_edges(g, A, mB), static_cast<long long>(A.size()) * static_cast<long long>(B.size()));
}

std::string to_string(RegularityVerdict v) {
  switch (v) {
    case RegularityVerdict::Regular:
      return "regular";
    case RegularityVerdict::Irregular:
      return "irregular";
    case RegularityVerdict::SampledLikelyRegular:
      return "sampled-likely-regular";
  }
  return "?";
}

long long min_significant(long long n, const Rational& eps) { return (eps * Rational(n)).floor() + 1; }

RegularPairReport regular_pair_test(const Graph& g, const VertexSet& A, const VertexSet& B, const Rational& eps,
                                    const RegularityOptions& opt) {
  check_pair(g, A, B, "regular_pair_test");
  if (eps <= Rational(0)) throw InputError("regular_pair_test: eps must be positive");
  long long a = static_cast<long long>(A.size()), b = static_cast<long long>(B.size());
  auto mB = mask_of(g.n(), B);
  long long E = cross_edges(g, A, mB);
  RegularPairReport r;
  r.eps = eps;
  r.density = Rational(E, a * b);
  long long sx = min_significant(a, eps), sy = min_significant(b, eps);

  RegularityMode mode = opt.mode;
  if (mode == RegularityMode::Auto) {
    if (E == 0 || E == a * b || sx > a || sy > b) {
      r.certified = true;  // every sub-density equals the density, or nothing is significant
      return r;
    }
    mode = (a <= 16 && b <= 16) ? RegularityMode::Exact : RegularityMode::Sampled;
  }
  if (sx > a || sy > b) {
    r.certified = true;
    return r;
  }

  if (mode == RegularityMode::Exact) {
    if (a > 16 || b > 16) throw InputError("regular_pair_test: exact mode needs |A|,|B| <= 16");
    r.certified = true;
    // adjacency of each B vertex as a bitmask over A
    std::vector<unsigned> nbr(b, 0);
    auto mA = mask_of(g.n(), A);
    std::vector<int> posA(g.n(), -1);
    for (int i = 0; i < a; ++i) posA[A[i]] = i;
    for (int j = 0; j < b; ++j)
      for (int w : g.neighbors(B[j]))
        if (mA[w]) nbr[j] |= 1u << posA[w];
    std::vector<int> order(b);
    std::vector<long long> deg(b);
    for (long long k = sx; k <= a; ++k) {
      unsigned mask = (1u << k) - 1;
      while (mask < (1u << a)) {
        for (int j = 0; j < b; ++j) deg[j] = __builtin_popcount(nbr[j] & mask);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return deg[x] < deg[y] || (deg[x] == deg[y] && x < y); });
        long long lo = 0, hi = 0;
        for (long long t = 1; t <= b; ++t) {
          lo += deg[order[t - 1]];
          hi += deg[order[b - t]];
          if (t < sy) continue;
          bool low = deviates(E, a, b, lo, k, t, eps), high = !low && deviates(E, a, b, hi, k, t, eps);
          if (low || high) {
            VertexSet X, Y;
            for (int i = 0; i < a; ++i)
              if (mask >> i & 1) X.push_back(A[i]);
            for (long long s = 0; s < t; ++s) Y.push_back(B[order[low ? s : b - 1 - s]]);
            std::sort(Y.begin(), Y.end());
            r.verdict = RegularityVerdict::Irregular;
            r.witness_density = Rational(low ? lo : hi, k * t);
            r.witness = std::make_pair(X, Y);
            return r;
          }
        }
        if (mask == 0) break;
        unsigned c = mask & -mask, nx = mask + c;
        mask = (((nx ^ mask) >> 2) / c) | nx;
      }
    }
    return r;
  }

  // sampled
  r.verdict = RegularityVerdict::SampledLikelyRegular;
  std::vector<int> pa(A.begin(), A.end()), pb(B.begin(), B.end());
  std::vector<char> mY(g.n(), 0);
  for (long long trial = 0; trial < opt.trials; ++trial) {
    std::seed_seq ss{static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(trial)};
    std::mt19937_64 rng(ss);
    for (long long i = 0; i < sx; ++i) std::swap(pa[i], pa[i + static_cast<long long>(rng() % (a - i))]);
    for (long long i = 0; i < sy; ++i) std::swap(pb[i], pb[i + static_cast<long long>(rng() % (b - i))]);
    VertexSet X(pa.begin(), pa.begin() + sx), Y(pb.begin(), pb.begin() + sy);
    for (int y : Y) mY[y] = 1;
    long long e = cross_edges(g, X, mY);
    for (int y : Y) mY[y] = 0;
    if (deviates(E, a, b, e, sx, sy, eps)) {
      std::sort(X.begin(), X.end());
      std::sort(Y.begin(), Y.end());
      r.verdict = RegularityVerdict::Irregular;
      r.certified = true;
      r.witness_density = Rational(e, sx * sy);
      r.witness = std::make_pair(X, Y);
      return r;
    }
  }
  return r;
}

bool witness_valid(const Graph& g, const VertexSet& A, const VertexSet& B, const RegularPairReport& r) {
  if (!r.witness) return false;
  const auto& [X, Y] = *r.witness;
  auto mA = mask_of(g.n(), A), mB = mask_of(g.n(), B);
  for (int x : X)
    if (!mA[x]) return false;
  for (int y : Y)
    if (!mB[y]) return false;
  if (normalized(X).size() != X.size() || normalized(Y).size() != Y.size()) return false;
  Rational sx(static_cast<long long>(X.size())), sy(static_cast<long long>(Y.size()));
  if (!(sx > r.eps * Rational(static_cast<long long>(A.size())))) return false;
  if (!(sy > r.eps * Rational(static_cast<long long>(B.size())))) return false;
  Rational dev = pair_density(g, A, B) - pair_density(g, X, Y);
  if (dev < Rational(0)) dev = -dev;
  return dev >= r.eps;
}

VertexSet typical_vertices(const Graph& g, const VertexSet& X, const VertexSet& W, const Rational& eps,
                           const Rational& d) {
  auto mW = mask_of(g.n(), W);
  Rational need = (d - Rational(2) * eps) * Rational(static_cast<long long>(W.size()));
  VertexSet out;
  for (int v : X)
    if (Rational(degree_into(g, v, mW)) >= need) out.push_back(v);
  return out;
}

ClusterGraph build_cluster_graph(const Graph& g, const std::vector<VertexSet>& partition, const ClusterOptions& opt) {
  int n = g.n();
  ClusterGraph cg;
  cg.clusters = partition;
  cg.has_exceptional = opt.has_exceptional;
  int first = opt.has_exceptional ? 1 : 0;
  int nc = static_cast<int>(partition.size());
  std::vector<int> owner(n, -1);
  for (int i = 0; i < nc; ++i)
    for (int v : partition[i]) {
      if (v < 0 || v >= n) throw InputError("build_cluster_graph: vertex " + std::to_string(v) + " out of range");
      if (owner[v] >= 0) throw InputError("build_cluster_graph: vertex " + std::to_string(v) + " in two clusters");
      owner[v] = i;
    }
  for (int v = 0; v < n; ++v)
    if (owner[v] < 0) throw InputError("build_cluster_graph: vertex " + std::to_string(v) + " not covered");
  for (int i = first; i < nc; ++i) {
    if (partition[i].empty()) throw InputError("build_cluster_graph: empty cluster");
    if (partition[i].size() != partition[first].size()) throw InputError("build_cluster_graph: unequal cluster sizes");
  }

  cg.weighted = WeightedGraph(nc);
  cg.cleaned = Graph(n);
  int pair_index = 0;
  for (int i = first; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j, ++pair_index) {
      Rational d = pair_density(g, partition[i], partition[j]);
      if (d == Rational(0) || d < opt.density_threshold) continue;
      auto ro = opt.regularity;
      ro.seed = opt.regularity.seed + static_cast<std::uint64_t>(pair_index);
      auto rep = regular_pair_test(g, partition[i], partition[j], opt.eps, ro);
      if (rep.verdict == RegularityVerdict::Irregular) continue;
      Rational w = d * Rational(static_cast<long long>(partition[j].size()));
      cg.edges.push_back({i, j, d, w, rep.certified});
      cg.weighted.set_edge(i, j, w);
      auto mj = mask_of(n, partition[j]);
      for (int u : partition[i])
        for (int v : g.neighbors(u))
          if (mj[v]) cg.cleaned.add_edge(u, v);
    }

  cg.large.assign(nc, 0);
  if (opt.in_L) {
    for (int i = first; i < nc; ++i) {
      bool all = std::all_of(partition[i].begin(), partition[i].end(), opt.in_L);
      if (all && avg_deg(cg.cleaned, partition[i]) >= opt.degree_threshold) cg.large[i] = 1;
    }
  }
  return cg;
}

bool is_packed(const Graph& g, const VertexSet& U, const VertexSet& X, const VertexSet& Y, const VertexSet& Z,
               PackednessParams& params) {
  int n = g.n();
  std::vector<int> tag(n, 0);
  int id = 0;
  for (const auto* s : {&X, &Y, &Z}) {
    ++id;
    for (int v : *s) {
      if (v < 0 || v >= n) throw InputError("is_packed: vertex out of range");
      if (tag[v]) throw InputError("is_packed: X, Y, Z are not disjoint");
      tag[v] = id;
    }
  }
  if (params.i != 1 && params.i != 2) throw InputError("is_packed: i must be 1 or 2");
  long long ux = 0, uy = 0;
  for (int v : normalized(U)) {
    if (v < 0 || v >= n || (tag[v] != 1 && tag[v] != 2)) throw InputError("is_packed: U is not inside X u Y");
    (tag[v] == 1 ? ux : uy) += 1;
  }
  Rational zx = avg_deg(g, Z, X), zy = avg_deg(g, Z, Y);
  params.mu = rmin(zx, zy);
  params.nu = rmax(zx, zy);
  Rational floor_ = rmin(Rational(params.i) * params.mu, params.nu) - params.lambda;
  if (Rational(std::min(ux, uy)) >= floor_) return true;
  return std::llabs(ux - uy) <= params.tau;
}

}  // namespace lks

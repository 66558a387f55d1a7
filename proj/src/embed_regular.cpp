#include <algorithm>
#include <cstdlib>
#include <deque>

#include "lks/embed.hpp"

namespace lks {

namespace {

Rational R(long long v) { return Rational(v); }
Rational sz(const VertexSet& s) { return Rational(static_cast<long long>(s.size())); }

bool subset_of(const VertexSet& a, const std::vector<char>& mask) {
  return std::all_of(a.begin(), a.end(), [&](int v) { return v >= 0 && v < static_cast<int>(mask.size()) && mask[v]; });
}

// deg(v, S) for every vertex, by walking S's adjacency lists.
std::vector<int> degrees_into(const Graph& g, const VertexSet& S) {
  std::vector<int> deg(g.n(), 0);
  for (int w : S)
    for (int v : g.neighbors(w)) ++deg[v];
  return deg;
}

// First k of `pool`, members outside `avoid` first, then by id.
VertexSet pick_auxiliary(const VertexSet& pool, const std::vector<char>& avoid, long long k) {
  VertexSet sorted = normalized(pool);
  std::stable_partition(sorted.begin(), sorted.end(), [&](int v) { return !avoid[v]; });
  sorted.resize(static_cast<size_t>(k));
  return sorted;
}

EmbedOutcome not_found(std::string strategy, std::string detail) {
  EmbedOutcome o;
  o.status = EmbedStatus::NotFound;
  o.strategy = std::move(strategy);
  o.detail = std::move(detail);
  return o;
}

}  // namespace

Rational regular_pair_delta(long long s, long long order, const Rational& eps, const Rational& d) {
  return (eps * R(s) + R(order)) / (d - R(2) * eps);
}

namespace {

// dXY = d(X,Y), passed in so repeated calls on one pair skip the edge count.
EmbedOutcome embed_pair(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& P, const VertexSet& Q,
                        const VertexSet& Pp, const VertexSet& Qp, const RootedTree& t, const Rational& eps,
                        const Rational& d, const RegularPairOptions& opt, RegularPairTrace* trace,
                        const Rational& dXY) {
  const char* who = "embed_in_regular_pair";
  if (dXY < d) throw PreconditionError("embed_in_regular_pair: d(X,Y) = " + dXY.str() + " < d");
  auto mX = mask_of(g.n(), X), mY = mask_of(g.n(), Y), mP = mask_of(g.n(), P), mQ = mask_of(g.n(), Q);
  if (!subset_of(P, mX) || normalized(P).size() != P.size())
    throw PreconditionError("embed_in_regular_pair: P is not a subset of X");
  if (!subset_of(Q, mY) || normalized(Q).size() != Q.size())
    throw PreconditionError("embed_in_regular_pair: Q is not a subset of Y");
  if (!subset_of(Pp, mP)) throw PreconditionError("embed_in_regular_pair: P' is not a subset of P");
  if (!subset_of(Qp, mQ)) throw PreconditionError("embed_in_regular_pair: Q' is not a subset of Q");
  long long s = static_cast<long long>(X.size());
  Rational Delta = regular_pair_delta(s, t.n(), eps, d);
  VertexSet pp = normalized(Pp), qp = normalized(Qp);
  if (sz(P) < Delta || sz(Q) < Delta)
    throw PreconditionError("embed_in_regular_pair: min{|P|,|Q|} < Delta = " + Delta.str());
  if (sz(pp) < Delta && sz(qp) < Delta)
    throw PreconditionError("embed_in_regular_pair: max{|P'|,|Q'|} < Delta = " + Delta.str());
  if (opt.avoid_P_prime && sz(P) - sz(pp) < Delta)
    throw PreconditionError("embed_in_regular_pair: avoiding P' needs |P \\ P'| >= Delta");
  if (opt.avoid_Q_prime && sz(Q) - sz(qp) < Delta)
    throw PreconditionError("embed_in_regular_pair: avoiding Q' needs |Q \\ Q'| >= Delta");
  if (opt.root_side == RootSide::P && sz(pp) < Delta)
    throw PreconditionError("embed_in_regular_pair: root in P' needs |P'| >= Delta");
  if (opt.root_side == RootSide::Q && sz(qp) < Delta)
    throw PreconditionError("embed_in_regular_pair: root in Q' needs |Q'| >= Delta");

  bool rootP = opt.root_side == RootSide::P || (opt.root_side == RootSide::Any && sz(pp) >= Delta);
  long long k = Delta.ceil();
  auto mPp = mask_of(g.n(), pp), mQp = mask_of(g.n(), qp);
  VertexSet SP = pick_auxiliary(P, mPp, k), SQ = pick_auxiliary(Q, mQp, k);
  if (trace) *trace = {Delta, SP, SQ};

  // typical w.r.t. S: deg(v, S) >= (d(X,Y) - 2 eps)|S|
  Rational thresh = (dXY - R(2) * eps) * R(k);
  auto dSP = degrees_into(g, SP), dSQ = degrees_into(g, SQ);
  auto typical = [&](int v, bool inX) { return R(inX ? dSQ[v] : dSP[v]) >= thresh; };
  std::vector<char> inSP = mask_of(g.n(), SP), inSQ = mask_of(g.n(), SQ);

  int n = t.n();
  std::vector<int> map(n, -1);
  std::vector<char> used(g.n(), 0);
  const VertexSet& rootPool = rootP ? pp : qp;
  int rv = -1;
  for (int v : rootPool)
    if (typical(v, rootP)) {
      rv = v;
      break;
    }
  if (rv < 0) return not_found(who, std::string("no vertex of ") + (rootP ? "P'" : "Q'") + " is typical");
  map[t.root()] = rv;
  used[rv] = 1;
  long long placed = 1;
  for (int x : t.bfs_order()) {
    if (x == t.root()) continue;
    int pu = map[t.parent(x)];
    bool parentInX = mX[pu];
    const std::vector<char>& target = parentInX ? inSQ : inSP;
    int pick = -1;
    for (int w : g.neighbors(pu))
      if (target[w] && !used[w] && typical(w, !parentInX)) {
        pick = w;
        break;
      }
    if (pick < 0)
      return not_found(who, "no unused typical neighbour for pattern vertex " + std::to_string(x) +
                                " (the pair is not regular enough)");
    map[x] = pick;
    used[pick] = 1;
    ++placed;
  }

  // construction invariants, rechecked
  auto chk = validate_embedding(g, t, map);
  if (!chk.ok) throw InternalError(std::string(who) + ": " + chk.violation);
  for (int x = 0; x < n; ++x) {
    int v = map[x];
    if (!(mP[v] || mQ[v])) throw InternalError("embed_in_regular_pair: image outside P u Q");
    if (!typical(v, mX[v])) throw InternalError("embed_in_regular_pair: atypical image");
    if (x == t.root()) continue;
    if (opt.avoid_P_prime && mPp[v]) throw InternalError("embed_in_regular_pair: re-entered P'");
    if (opt.avoid_Q_prime && mQp[v]) throw InternalError("embed_in_regular_pair: re-entered Q'");
  }
  EmbedOutcome o;
  o.status = EmbedStatus::Found;
  o.embedding.map = std::move(map);
  o.strategy = who;
  o.nodes = placed;
  return o;
}

}  // namespace

EmbedOutcome embed_in_regular_pair(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& P,
                                   const VertexSet& Q, const VertexSet& Pp, const VertexSet& Qp, const RootedTree& t,
                                   const Rational& eps, const Rational& d, const RegularPairOptions& opt,
                                   RegularPairTrace* trace) {
  if (!(eps > R(0)) || !(d > R(2) * eps)) throw PreconditionError("embed_in_regular_pair: need d > 2 eps > 0");
  if (X.size() != Y.size()) throw PreconditionError("embed_in_regular_pair: |X| != |Y|");
  Rational dXY = pair_density(g, X, Y);  // also checks disjointness
  return embed_pair(g, X, Y, P, Q, Pp, Qp, t, eps, d, opt, trace, dXY);
}

// ------------------------------------------------------------------ fill-up

FillQuantities fill_quantities(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z,
                               const FillParams& p) {
  FillQuantities q;
  q.s = static_cast<long long>(X.size());
  Rational es = p.eps * R(q.s), tau = R(p.tau);
  q.Delta = (es + tau) / (p.d - R(2) * p.eps);
  q.lambda1 = q.Delta + tau + R(3) * es;
  q.lambda2 = R(3) * q.Delta + R(7) * es + R(4) * tau;
  q.dXY = pair_density(g, X, Y);
  q.dZX = pair_density(g, Z, X);
  q.dZY = pair_density(g, Z, Y);
  q.degZX = avg_deg(g, Z, X);
  q.degZY = avg_deg(g, Z, Y);
  return q;
}

namespace {

struct ForestLevels {
  VertexSet F1, F2;  // odd / even distance from the root, root excluded
  std::vector<VertexSet> components;  // one per child of the root
};

ForestLevels forest_levels(const RootedTree& F) {
  ForestLevels L;
  for (int x = 0; x < F.n(); ++x) {
    if (x == F.root()) continue;
    (F.depth(x) % 2 ? L.F1 : L.F2).push_back(x);
  }
  for (int c : F.children(F.root())) L.components.push_back(F.subtree_vertices(c));
  return L;
}

void fail(const std::string& what) { throw PreconditionError("fill_regular_pair: " + what); }

// deg(r, W) >= (density - 2 eps)|W|
bool typical_into(const Graph& g, int r, const VertexSet& W, const Rational& density, const Rational& eps) {
  return R(degree_into(g, r, mask_of(g.n(), W))) >= (density - R(2) * eps) * sz(W);
}

}  // namespace

void check_fill_hypotheses(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z,
                           const RootedTree& F, int r, const VertexSet& U, const FillParams& p) {
  if (p.mode < 1 || p.mode > 3) throw InputError("fill_regular_pair: mode must be 1, 2 or 3");
  if (X.empty() || Y.empty() || Z.empty()) fail("X, Y and Z must be nonempty");
  if (X.size() != Y.size()) fail("|X| != |Y|");
  {
    std::vector<char> seen(g.n(), 0);
    for (const auto* S : {&X, &Y, &Z})
      for (int v : *S) {
        if (v < 0 || v >= g.n()) throw InputError("fill_regular_pair: vertex out of range");
        if (seen[v]) fail("X, Y, Z are not disjoint");
        seen[v] = 1;
      }
  }
  if (!(p.eps > R(0)) || !(p.d > R(2) * p.eps)) fail("need d > 2 eps > 0");
  if (p.tau < 1) fail("tau must be positive");
  auto mZ = mask_of(g.n(), Z);
  if (r < 0 || r >= g.n() || !mZ[r]) fail("r is not in Z");
  auto q = fill_quantities(g, X, Y, Z, p);
  if (q.dXY < p.d) fail("e(X,Y)/s^2 = " + q.dXY.str() + " < d");
  for (auto [name, dz] : {std::pair{"d(Z,X)", q.dZX}, std::pair{"d(Z,Y)", q.dZY}})
    if (dz != R(0) && dz < p.d) fail(std::string(name) + " = " + dz.str() + " is not in {0} u [d,1]");
  auto mXY = mask_of(g.n(), X);
  for (int v : Y) mXY[v] = 1;
  VertexSet Un = normalized(U);
  if (!subset_of(Un, mXY)) fail("U is not inside X u Y");
  auto L = forest_levels(F);
  for (const auto& c : L.components)
    if (static_cast<long long>(c.size()) > p.tau)
      fail("a component of F-R has order " + std::to_string(c.size()) + " > tau");

  Rational es = p.eps * R(q.s);
  Rational degXY = q.degZX + q.degZY;
  Rational vF = R(F.n()), u = sz(Un);
  long long ux = 0;
  auto mX = mask_of(g.n(), X);
  for (int v : Un) ux += mX[v];
  PackednessParams pk{p.mode == 3 ? q.lambda2 : q.lambda1, p.tau, p.mode == 3 ? 2 : 1, {}, {}};

  if (p.mode == 1 || p.mode == 2) {
    if (p.mode == 1 && vF + u > degXY - q.lambda1 - q.Delta - R(2) * es)
      fail("v(F)+|U| > deg(Z,XuY) - lambda1 - Delta - 2 eps s");
    if (p.mode == 2) {
      Rational lhs = R(static_cast<long long>(std::max(L.F1.size(), L.F2.size()))) + R(ux);
      if (lhs > q.degZX - q.lambda1 - q.Delta - es)
        fail("max{|F1|,|F2|}+|X n U| > deg(Z,X) - lambda1 - Delta - eps s");
    }
    if (!is_packed(g, Un, X, Y, Z, pk)) fail("U is not 1-packed");
    if (!typical_into(g, r, X, q.dZX, p.eps)) fail("r is not typical w.r.t. X");
    if (!typical_into(g, r, Y, q.dZY, p.eps)) fail("r is not typical w.r.t. Y");
    return;
  }
  Rational s = R(q.s), es3 = p.eta * s;
  if (q.degZX < es3 || q.degZX > (R(1) - p.eta) * s) fail("deg(Z,X) is not in [eta s, (1-eta) s]");
  if (es3 < R(12) * q.lambda2) fail("eta s < 12 lambda2");
  if (!is_packed(g, Un, X, Y, Z, pk)) fail("U is not 2-packed");
  for (const auto& c : L.components)
    if (c.size() < 2) fail("each component of F-R has at least two vertices");
  VertexSet XmU, YmU;
  auto mU = mask_of(g.n(), Un);
  for (int v : X)
    if (!mU[v]) XmU.push_back(v);
  for (int v : Y)
    if (!mU[v]) YmU.push_back(v);
  if (!typical_into(g, r, XmU, q.dZX, p.eps)) fail("r is not typical w.r.t. X \\ U");
  if (!typical_into(g, r, YmU, q.dZY, p.eps)) fail("r is not typical w.r.t. Y \\ U");
  if (vF + u > degXY + es3 / R(4)) fail("v(F)+|U| > deg(Z,XuY) + eta s/4");
}

std::vector<BulletResult> check_fill_postconditions(const Graph& g, const VertexSet& X, const VertexSet& Y,
                                                    const VertexSet& Z, const RootedTree& F, int r,
                                                    const VertexSet& U, const FillParams& p,
                                                    const std::vector<int>& map) {
  std::vector<BulletResult> out;
  auto chk = validate_embedding(g, F, map);
  out.push_back({"embedding", chk.ok, chk.violation});
  if (!chk.ok) return out;
  out.push_back({"root at r", map[F.root()] == r, ""});
  auto mXY = mask_of(g.n(), X);
  for (int v : Y) mXY[v] = 1;
  auto mU = mask_of(g.n(), U);
  auto mZ = mask_of(g.n(), Z);
  auto L = forest_levels(F);
  BulletResult c1{"(c1) images avoid U", true, ""};
  VertexSet img;
  for (int x = 0; x < F.n(); ++x) {
    if (x == F.root()) continue;
    int v = map[x];
    img.push_back(v);
    if (!mXY[v] || mU[v]) {
      c1.pass = false;
      c1.detail = "vertex " + std::to_string(x) + " -> " + std::to_string(v);
      break;
    }
  }
  out.push_back(c1);
  BulletResult c2{"(c2) F1 images have (d-2eps)|Z| neighbours in Z", true, ""};
  Rational need = (p.d - R(2) * p.eps) * sz(Z);
  for (int x : L.F1)
    if (R(degree_into(g, map[x], mZ)) < need) {
      c2.pass = false;
      c2.detail = "vertex " + std::to_string(x) + " -> " + std::to_string(map[x]);
      break;
    }
  out.push_back(c2);
  auto q = fill_quantities(g, X, Y, Z, p);
  VertexSet all = U;
  all.insert(all.end(), img.begin(), img.end());
  PackednessParams pk{p.mode == 3 ? q.lambda2 : q.lambda1, p.tau, p.mode == 3 ? 2 : 1, {}, {}};
  bool packed = is_packed(g, normalized(all), X, Y, Z, pk);
  out.push_back({p.mode == 3 ? "(d) 2-packed" : "(c3) 1-packed", packed, ""});
  return out;
}

EmbedOutcome fill_regular_pair(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z,
                               const RootedTree& F, int r, const VertexSet& U, const FillParams& p) {
  const char* who = "fill_regular_pair";
  check_fill_hypotheses(g, X, Y, Z, F, r, U, p);
  auto q = fill_quantities(g, X, Y, Z, p);
  int n = g.n();
  auto mX = mask_of(n, X), mY = mask_of(n, Y);
  // B: vertices of X u Y not typical w.r.t. Z
  std::vector<char> bad(n, 0);
  {
    auto degZ = degrees_into(g, Z);
    Rational zs = sz(Z);
    for (int v : X)
      if (R(degZ[v]) < (q.dZX - R(2) * p.eps) * zs) bad[v] = 1;
    for (int v : Y)
      if (R(degZ[v]) < (q.dZY - R(2) * p.eps) * zs) bad[v] = 1;
  }
  std::vector<char> used = mask_of(n, normalized(U));
  long long ux = 0, uy = 0;
  for (int v : normalized(U)) (mX[v] ? ux : uy) += 1;
  std::vector<char> nbr_r(n, 0);
  for (int v : g.neighbors(r)) nbr_r[v] = 1;

  // order: trees of order <= 2, then stars centred at their root, then the rest
  auto L = forest_levels(F);
  std::vector<int> cls(L.components.size());
  for (size_t i = 0; i < L.components.size(); ++i) {
    const auto& c = L.components[i];
    int root = F.children(F.root())[i];
    if (c.size() <= 2)
      cls[i] = 0;
    else if (static_cast<int>(F.children(root).size()) + 1 == static_cast<int>(c.size()))
      cls[i] = 1;
    else
      cls[i] = 2;
  }
  std::vector<size_t> order(L.components.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return cls[a] < cls[b]; });

  std::vector<int> map(F.n(), -1);
  map[F.root()] = r;
  int last_root_side = -1;  // 0 = X, 1 = Y
  long long placed = 1;
  for (size_t idx : order) {
    const VertexSet& comp = L.components[idx];
    int croot = F.children(F.root())[idx];
    // local tree: index i of the piece is comp[i]
    std::vector<int> local(F.n(), -1);
    for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<int> par(comp.size(), -1);
    long long even = 0, odd = 0;
    for (size_t i = 0; i < comp.size(); ++i) {
      int x = comp[i];
      if (x != croot) par[i] = local[F.parent(x)];
      ((F.depth(x) - F.depth(croot)) % 2 ? odd : even) += 1;
    }
    RootedTree t(par);

    VertexSet Pi, Qi, Ppi, Qpi;
    for (int v : X)
      if (!used[v] && !bad[v]) {
        Pi.push_back(v);
        if (nbr_r[v]) Ppi.push_back(v);
      }
    for (int v : Y)
      if (!used[v] && !bad[v]) {
        Qi.push_back(v);
        if (nbr_r[v]) Qpi.push_back(v);
      }
    Rational Dt = regular_pair_delta(q.s, t.n(), p.eps, p.d);
    if (sz(Pi) < Dt || sz(Qi) < Dt || (sz(Ppi) < Dt && sz(Qpi) < Dt))
      return not_found(who, "component " + std::to_string(croot) + ": free space below Delta");
    RegularPairOptions opt;
    if (p.mode == 3) {
      opt.avoid_P_prime = sz(Pi) - sz(Ppi) > q.Delta;
      opt.avoid_Q_prime = sz(Qi) - sz(Qpi) > q.Delta;
    }
    bool canP = sz(Ppi) >= Dt, canQ = sz(Qpi) >= Dt;
    int side;
    if (canP && canQ) {
      long long imbX = std::llabs((ux + even) - (uy + odd)), imbY = std::llabs((ux + odd) - (uy + even));
      if (imbX != imbY)
        side = imbX < imbY ? 0 : 1;
      else if (t.n() == 2 && last_root_side >= 0)
        side = 1 - last_root_side;
      else
        side = 0;
    } else {
      side = canP ? 0 : 1;
    }
    opt.root_side = side == 0 ? RootSide::P : RootSide::Q;
    auto o = embed_pair(g, X, Y, Pi, Qi, Ppi, Qpi, t, p.eps, p.d, opt, nullptr, q.dXY);
    if (!o.found()) return not_found(who, "component " + std::to_string(croot) + ": " + o.detail);
    for (size_t i = 0; i < comp.size(); ++i) {
      int v = o.embedding.map[i];
      map[comp[i]] = v;
      used[v] = 1;
      (mX[v] ? ux : uy) += 1;
      ++placed;
    }
    last_root_side = side;
  }

  auto post = check_fill_postconditions(g, X, Y, Z, F, r, U, p, map);
  for (const auto& b : post)
    if (!b.pass) return not_found(who, "postcondition " + b.name + " failed " + b.detail);
  EmbedOutcome o;
  o.status = EmbedStatus::Found;
  o.embedding.map = std::move(map);
  o.strategy = who;
  o.nodes = placed;
  return o;
}

}  // namespace lks

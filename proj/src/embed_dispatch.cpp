#include <algorithm>
#include <chrono>
#include <functional>

#include "lks/embed.hpp"
#include "lks/extremal.hpp"

namespace lks {

namespace {

using Clock = std::chrono::steady_clock;

EmbedOutcome checked(const Graph& g, const RootedTree& t, EmbedOutcome out) {
  if (!out.found()) return out;
  auto chk = validate_embedding(g, t, out.embedding.map);
  if (!chk.ok) throw InternalError("embed_tree: " + out.strategy + " returned an invalid embedding: " + chk.violation);
  return out;
}

std::optional<EmbedOutcome> star_shortcut(const Graph& g, const RootedTree& t, const VertexSet& L) {
  int n = t.n();
  int centre = -1;
  for (int x = 0; x < n; ++x)
    if (t.degree(x) == n - 1) centre = x;
  if (centre < 0 || L.empty()) return std::nullopt;
  int h = L.front();
  if (g.degree(h) < n - 1) return std::nullopt;
  EmbedOutcome out;
  out.status = EmbedStatus::Found;
  out.strategy = "star";
  out.embedding.map.assign(n, -1);
  out.embedding.map[centre] = h;
  int next = 0;
  for (int x = 0; x < n; ++x)
    if (x != centre) out.embedding.map[x] = g.neighbors(h)[next++];
  out.nodes = n;
  return out;
}

std::vector<std::pair<VertexSet, VertexSet>> tree_partitions(const RootedTree& t) {
  std::vector<std::pair<VertexSet, VertexSet>> out;
  if (t.n() >= 2) {
    auto d = discrepancy(t);
    out.emplace_back(d.U1, d.U2);
  }
  auto cs = color_stats(t);
  out.emplace_back(cs.To, cs.Te);
  return out;
}

// Small-discrepancy placement inside one cluster: L* from L^i, S* the rest of
// L^i u S^i_diamond.
std::optional<EmbedOutcome> extremal_strategy(const Graph& g, const RootedTree& t, int k, const DispatchOptions& opt,
                                              std::string& log) {
  ExtremalPartition p;
  p.clusters = *opt.clusters;
  VertexSet covered;
  for (const auto& c : p.clusters) covered.insert(covered.end(), c.begin(), c.end());
  auto mc = mask_of(g.n(), normalized(covered));
  for (int v = 0; v < g.n(); ++v)
    if (!mc[v]) p.residual.push_back(v);
  auto cs = cluster_sets(g, p, k, opt.gamma);
  auto parts = tree_partitions(t);
  for (std::size_t i = 0; i < cs.Li.size(); ++i) {
    const auto& Li = cs.Li[i];
    VertexSet pool = Li;
    pool.insert(pool.end(), cs.S_diamond[i].begin(), cs.S_diamond[i].end());
    pool = normalized(pool);
    for (const auto& [U1, U2] : parts) {
      std::vector<long long> sizes{static_cast<long long>(Li.size()),
                                   ((Rational(1) - opt.gamma / Rational(2)) * Rational(k) / Rational(2)).ceil(),
                                   static_cast<long long>(U1.size())};
      for (long long s : sizes) {
        if (s <= 0 || s > static_cast<long long>(Li.size())) continue;
        VertexSet Lstar(Li.begin(), Li.begin() + s), Sstar;
        std::set_difference(pool.begin(), pool.end(), Lstar.begin(), Lstar.end(), std::back_inserter(Sstar));
        try {
          auto out = embed_semiindependent(g, Lstar, Sstar, t, U1, U2);
          if (out.found()) {
            out.strategy = "extremal-semiindependent";
            out.detail = "cluster " + std::to_string(i + 1) + ", |L*|=" + std::to_string(s);
            return out;
          }
        } catch (const PreconditionError& e) {
          log = e.what();
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

EmbedOutcome embed_tree(const Graph& g, const RootedTree& t, int k, const DispatchOptions& opt) {
  auto cls = classify_lks(g, k);
  if (!cls.holds) throw PreconditionError("embed_tree: fewer than half of the vertices have degree >= k");
  if (t.n() != k + 1)
    throw PreconditionError("embed_tree: tree has " + std::to_string(t.n()) + " vertices, expected k+1=" +
                            std::to_string(k + 1));
  const auto& s = opt.strategy;
  if (s != "auto" && s != "greedy" && s != "semiind" && s != "extremal" && s != "backtrack")
    throw InputError("embed_tree: unknown strategy '" + s + "'");
  bool all = s == "auto";
  auto start = Clock::now();
  std::string last;  // most recent skipped-engine reason

  // In auto mode an engine whose hypotheses fail is skipped; a named strategy reports it.
  auto attempt = [&](const std::function<EmbedOutcome()>& engine) -> std::optional<EmbedOutcome> {
    try {
      auto out = checked(g, t, engine());
      if (out.found()) return out;
      last = out.detail;
    } catch (const PreconditionError& e) {
      if (!all) throw;
      last = e.what();
    }
    return std::nullopt;
  };

  if (all) {
    if (auto out = star_shortcut(g, t, cls.L)) return checked(g, t, *out);
  }
  if (all || s == "greedy") {
    if (g.min_degree() >= k || !all)
      if (auto out = attempt([&] { return greedy_embed(g, t, GreedyMode::min_degree()); })) return *out;
    if (all) {
      for (const auto& [a, b] : {std::make_pair(cls.L, cls.S), std::make_pair(cls.S, cls.L)})
        if (auto out = attempt([&] { return greedy_embed(g, t, GreedyMode::bipartite(a, b)); })) return *out;
    }
  }
  if ((all || s == "semiind") && t.n() >= 2) {
    for (const auto& [U1, U2] : tree_partitions(t))
      if (auto out = attempt([&] { return embed_semiindependent(g, cls.L, cls.S, t, U1, U2); })) return *out;
  }
  if ((all || s == "extremal") && opt.clusters) {
    try {
      if (auto out = extremal_strategy(g, t, k, opt, last)) return checked(g, t, *out);
    } catch (const PreconditionError& e) {
      if (!all) throw;
      last = e.what();
    }
  } else if (s == "extremal") {
    throw PreconditionError("embed_tree: the extremal strategy needs a cluster partition");
  }
  if (all || s == "backtrack") {
    long long spent = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    auto out = checked(g, t, backtracking_embed(g, t, std::max(1LL, opt.timeout_ms - spent), opt.threads));
    return out;
  }
  EmbedOutcome none;
  none.status = EmbedStatus::NotFound;
  none.strategy = s;
  none.detail = last;
  return none;
}

}  // namespace lks

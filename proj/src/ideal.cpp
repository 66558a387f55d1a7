#include <algorithm>
#include <set>

#include "lks/extremal.hpp"

namespace lks {

namespace {

VertexSet sym_diff(const VertexSet& a, const VertexSet& b) {
  VertexSet sa = normalized(a), sb = normalized(b), out;
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

struct Candidate {
  std::string label;
  VertexSet U1, U2;
};

// Flip F out of the pair (A, B); the smaller side becomes U1.
Candidate flipped(const std::string& label, const VertexSet& A, const VertexSet& B, const VertexSet& F) {
  VertexSet a = sym_diff(A, F), b = sym_diff(B, F);
  if (a.size() > b.size()) std::swap(a, b);
  return {label, a, b};
}

}  // namespace

bool is_ideal(const RootedTree& t, const VertexSet& U1, const VertexSet& U2, int l) {
  auto c = check_semiindependent(t, U1, U2);
  return c.semiindependent && c.leaves_in_U1 >= l && c.leaves_in_U2 >= l;
}

IdealResult find_ideal_partition(const RootedTree& t, int l) {
  int n = t.n();
  IdealResult res;
  auto leaves = t.leaves();
  if (static_cast<long long>(leaves.size()) < 2LL * l) {
    res.reason = "only " + std::to_string(leaves.size()) + " leaves, fewer than 2l=" + std::to_string(2 * l);
    return res;
  }
  auto cs = color_stats(t);
  const VertexSet &Te = cs.Te, &To = cs.To;
  std::vector<char> inTe = mask_of(n, Te), isLeaf = mask_of(n, leaves);
  VertexSet We, Wo;
  for (int w : leaves) (inTe[w] ? We : Wo).push_back(w);
  int we = static_cast<int>(We.size()), wo = static_cast<int>(Wo.size());

  auto accept = [&](const Candidate& c) {
    if (!is_ideal(t, c.U1, c.U2, l)) return false;
    ConnectingStructure s;
    s.kind = ConnectingStructure::Kind::IdealPartition;
    s.U1 = c.U1;
    s.U2 = c.U2;
    s.note = c.label;
    res.partition = s;
    return true;
  };

  if (accept({"(T_o, T_e)", To, Te})) return res;

  std::string why;
  if (we < l) {
    // Par(W_o), parents with fewer leaf children first.
    std::vector<int> nleaf(n, 0);
    for (int w : Wo) nleaf[t.neighbors(w)[0]]++;
    VertexSet par;
    for (int v = 0; v < n; ++v)
      if (nleaf[v] > 0) par.push_back(v);
    std::stable_sort(par.begin(), par.end(), [&](int a, int b) { return nleaf[a] < nleaf[b]; });
    for (std::size_t p = 1; p <= par.size(); ++p) {
      VertexSet F(par.begin(), par.begin() + static_cast<long>(p));
      for (std::size_t i = 0; i < p; ++i)
        for (int w : t.neighbors(par[i]))
          if (isLeaf[w] && !inTe[w]) F.push_back(w);
      if (accept(flipped("W_o-flip |P'|=" + std::to_string(p), To, Te, F))) return res;
    }
    why = "w_e < l and no W_o-flip is ideal";
  } else if (wo < l) {
    int avail = static_cast<int>(t.rooted_leaves().size());
    std::set<VertexSet> seen;
    int gap = cs.gap;
    for (int target = std::min(5 * l, avail); target >= 1; --target) {
      auto fs = full_subtree(t, FullSubtreeMode::ByLeaves, target);
      if (!seen.insert(fs.vertices).second) continue;
      int r = fs.root;
      auto mT = mask_of(n, fs.vertices);
      int d = 0;
      for (int v : fs.vertices) d += inTe[v] ? 1 : -1;
      bool rE = inTe[r];
      std::string tag = "leaves " + std::to_string(fs.leaves) + ", ";
      VertexSet noRoot;
      for (int v : fs.vertices)
        if (v != r) noRoot.push_back(v);
      // C1/C2 flip V(T~); C3/C4 flip V(T~) - r
      if ((rE && 2 * d <= gap) || (!rE && 2 * d >= gap))
        if (accept(flipped(tag + (rE ? "C1" : "C2") + " flip V(T~)", To, Te, fs.vertices))) return res;
      if ((rE && 2 * d >= gap + 2) || (!rE && 2 * d <= gap - 2))
        if (accept(flipped(tag + (rE ? "C3" : "C4") + " flip V(T~)-r", To, Te, noRoot))) return res;
      if ((rE && 2 * d == gap + 1) || (!rE && 2 * d == gap - 1)) {
        std::string c = rE ? "C5" : "C6";
        VertexSet O1 = sym_diff(To, fs.vertices), O2 = sym_diff(Te, fs.vertices);
        auto mO1 = mask_of(n, O1);
        for (int u : t.neighbors(r))
          if (isLeaf[u] && !mT[u] && accept(flipped(tag + c + " club1 u=" + std::to_string(u), O1, O2, {u}))) return res;
        for (int x = 0; x < n; ++x) {
          VertexSet zs;
          for (int z : t.neighbors(x))
            if (isLeaf[z] && mO1[z]) zs.push_back(z);
          if (zs.size() >= 2 && accept(flipped(tag + c + " club2 x=" + std::to_string(x), O1, O2, {x, zs[0], zs[1]})))
            return res;
        }
      }
    }
    why = "w_o < l and no full-subtree flip is ideal";
  } else {
    why = "(T_o, T_e) not semiindependent";  // unreachable: T_e is independent and the larger class
  }
  res.reason = why + " (w_e=" + std::to_string(we) + ", w_o=" + std::to_string(wo) + ")";
  return res;
}

std::optional<ConnectingStructure> big_component_vertex(const RootedTree& t, int lo, int hi) {
  if (lo > hi) throw InputError("big_component_vertex: lo > hi");
  int n = t.n();
  for (int r = 0; r < n; ++r) {
    int pick = -1;  // child whose subtree qualifies, or -2 for the parent side
    for (int c : t.children(r)) {
      int s = t.subtree_size(c);
      if (s >= lo && s <= hi) {
        pick = c;
        break;
      }
    }
    int up = n - t.subtree_size(r);
    if (pick == -1 && t.parent(r) >= 0 && up >= lo && up <= hi) pick = -2;
    if (pick == -1) continue;
    ConnectingStructure s;
    s.kind = ConnectingStructure::Kind::BigComponent;
    s.vertex = r;
    if (pick >= 0) {
      s.component = normalized(t.subtree_vertices(pick));
    } else {
      auto below = mask_of(n, t.subtree_vertices(r));
      for (int v = 0; v < n; ++v)
        if (!below[v]) s.component.push_back(v);
    }
    return s;
  }
  return std::nullopt;
}

}  // namespace lks

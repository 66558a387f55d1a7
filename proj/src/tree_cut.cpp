#include "lks/tree_cut.hpp"

#include <algorithm>

namespace lks {

namespace {

// Components of T minus the marked vertices, each with its top, seed and
// end-tree flag. Requires the root to be marked.
std::vector<Shrublet> components_outside(const RootedTree& t, const std::vector<char>& marked) {
  int n = t.n();
  std::vector<int> comp(n, -1);
  std::vector<Shrublet> out;
  for (int v : t.bfs_order()) {
    if (marked[v]) continue;
    int p = t.parent(v);
    if (p >= 0 && !marked[p]) {
      comp[v] = comp[p];
    } else {
      comp[v] = static_cast<int>(out.size());
      Shrublet s;
      s.top = v;
      s.seed = p;
      out.push_back(s);
    }
    out[comp[v]].vertices.push_back(v);
  }
  for (auto& s : out) {
    std::sort(s.vertices.begin(), s.vertices.end());
    s.end_tree = static_cast<int>(s.vertices.size()) == t.subtree_size(s.top);
  }
  return out;
}

void split_by_seed(const std::vector<Shrublet>& all, const std::vector<char>& inA, FinePartition& fp) {
  fp.DA.clear();
  fp.DB.clear();
  for (const auto& s : all) (inA[s.seed] ? fp.DA : fp.DB).push_back(s);
}

long long end_mass(const std::vector<Shrublet>& d) {
  long long m = 0;
  for (const auto& s : d)
    if (s.end_tree) m += static_cast<long long>(s.vertices.size());
  return m;
}

}  // namespace

bool FineReport::all_pass() const {
  return std::all_of(bullets.begin(), bullets.end(), [](const BulletResult& b) { return b.pass; });
}

FinePartition fine_partition(const RootedTree& t, int ell) {
  int n = t.n();
  if (ell < 1 || ell > n - 1)
    throw PreconditionError("fine_partition: need 1 <= ell <= v(T)-1 (ell=" + std::to_string(ell) + ")");
  FinePartition fp;
  fp.ell = ell;
  fp.root = t.root();

  std::vector<char> alive(n, 1);
  std::vector<int> size(n);
  const auto& order = t.bfs_order();
  while (true) {
    std::fill(size.begin(), size.end(), 0);
    for (int i = n - 1; i >= 0; --i) {
      int v = order[i];
      if (!alive[v]) continue;
      size[v] += 1;
      if (t.parent(v) >= 0) size[t.parent(v)] += size[v];
    }
    // minimal: big subtree, but every child subtree small; lowest id wins
    int x = -1;
    for (int v = 0; v < n && x < 0; ++v) {
      if (!alive[v] || size[v] <= ell) continue;
      bool minimal = true;
      for (int c : t.children(v))
        if (alive[c] && size[c] > ell) minimal = false;
      if (minimal) x = v;
    }
    if (x < 0) break;
    fp.cut_vertices.push_back(x);
    for (int v : t.subtree_vertices(x))
      if (v != x) alive[v] = 0;
  }
  if (fp.cut_vertices.empty() || fp.cut_vertices.back() != t.root()) fp.cut_vertices.push_back(t.root());

  std::vector<char> inAp(n, 0), inBp(n, 0), cut(n, 0);
  for (int x : fp.cut_vertices) {
    cut[x] = 1;
    (t.depth(x) % 2 == 0 ? inAp : inBp)[x] = 1;
  }
  std::vector<char> inA = inAp, inB = inBp;
  for (const auto& c : components_outside(t, cut)) {
    bool seedA = inAp[c.seed];
    for (int v : c.vertices) {
      bool touches = false;
      for (int w : t.neighbors(v))
        if (seedA ? inBp[w] : inAp[w]) touches = true;
      if (touches) (seedA ? inA : inB)[v] = 1;
    }
  }
  std::vector<char> marked(n, 0);
  for (int v = 0; v < n; ++v) {
    if (inA[v]) fp.WA.push_back(v);
    if (inB[v]) fp.WB.push_back(v);
    marked[v] = inA[v] || inB[v];
  }
  split_by_seed(components_outside(t, marked), inA, fp);
  return fp;
}

FinePartition switched_fine_partition(const RootedTree& t, int ell) {
  FinePartition fp = fine_partition(t, ell);
  fp.variant = FineVariant::Switched;
  if (end_mass(fp.DA) < end_mass(fp.DB)) {
    std::swap(fp.WA, fp.WB);
    std::swap(fp.DA, fp.DB);
    fp.swapped = true;
  }
  int n = t.n();
  auto inA = mask_of(n, fp.WA), inB = mask_of(n, fp.WB);
  for (const auto& s : fp.DB) {
    if (s.end_tree) continue;
    for (int v : s.vertices)
      for (int w : t.neighbors(v))
        if (inB[w]) inA[v] = 1;
  }
  fp.WA.clear();
  std::vector<char> marked(n, 0);
  for (int v = 0; v < n; ++v) {
    if (inA[v]) fp.WA.push_back(v);
    marked[v] = inA[v] || inB[v];
  }
  split_by_seed(components_outside(t, marked), inA, fp);
  return fp;
}

FineReport validate_fine_partition(const RootedTree& t, const FinePartition& fp, long long k) {
  int n = t.n();
  bool sw = fp.variant == FineVariant::Switched;
  FineReport rep;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rep.bullets.push_back({name, pass, pass ? "" : detail});
  };

  // decomposition: every vertex exactly once; trees are components of T - W
  std::vector<int> owner(n, 0);
  bool part_ok = true;
  std::string part_detail;
  auto claim = [&](int v, int who) {
    if (v < 0 || v >= n) {
      part_ok = false;
      part_detail = "vertex out of range";
    } else if (owner[v]) {
      part_ok = false;
      part_detail = "vertex " + std::to_string(v) + " listed twice";
    } else {
      owner[v] = who;
    }
  };
  for (int v : fp.WA) claim(v, 1);
  for (int v : fp.WB) claim(v, 2);
  for (const auto& s : fp.DA)
    for (int v : s.vertices) claim(v, 3);
  for (const auto& s : fp.DB)
    for (int v : s.vertices) claim(v, 4);
  for (int v = 0; v < n && part_ok; ++v)
    if (!owner[v]) {
      part_ok = false;
      part_detail = "vertex " + std::to_string(v) + " not covered";
    }
  std::vector<char> inW(n, 0), inA(n, 0), inB(n, 0);
  for (int v : fp.WA)
    if (v >= 0 && v < n) inW[v] = inA[v] = 1;
  for (int v : fp.WB)
    if (v >= 0 && v < n) inW[v] = inB[v] = 1;
  if (part_ok) {
    auto comps = components_outside(t, inW);
    std::vector<VertexSet> want, have;
    for (auto& c : comps) want.push_back(c.vertices);
    for (auto* d : {&fp.DA, &fp.DB})
      for (auto& s : *d) have.push_back(normalized(s.vertices));
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) {
      part_ok = false;
      part_detail = "shrublets are not the components of T - (WA u WB)";
    }
  }
  add("partition", part_ok, part_detail);

  if (sw) {
    add("root", (fp.root >= 0 && fp.root < n && inW[fp.root]), "root not in WA' u WB");
  } else {
    add("root", (fp.root >= 0 && fp.root < n && inA[fp.root]), "root not in WA");
  }

  bool parity = true;
  std::string pdetail;
  auto chk = [&](const VertexSet& X, const VertexSet& Y, int want) {
    for (int a : X)
      for (int b : Y)
        if (a >= 0 && b >= 0 && a < n && b < n && t.distance(a, b) % 2 != want) {
          parity = false;
          pdetail = "dist(" + std::to_string(a) + "," + std::to_string(b) + ") has wrong parity";
        }
  };
  chk(fp.WA, fp.WB, 1);
  chk(fp.WA, fp.WA, 0);
  chk(fp.WB, fp.WB, 0);
  add("parity", parity, pdetail);

  bool adj = true;
  std::string adetail;
  auto no_touch = [&](const std::vector<Shrublet>& d, const std::vector<char>& forbid, const char* what) {
    for (const auto& s : d)
      for (int v : s.vertices)
        if (v >= 0 && v < n)
          for (int w : t.neighbors(v))
            if (forbid[w]) {
              adj = false;
              adetail = std::string(what) + ": shrublet vertex " + std::to_string(v) + " touches " + std::to_string(w);
            }
  };
  no_touch(fp.DA, inB, "DA-WB");
  no_touch(fp.DB, inA, "DB-WA");
  // each shrublet hangs from its own side
  for (auto* d : {&fp.DA, &fp.DB})
    for (const auto& s : *d) {
      if (s.vertices.empty()) continue;
      int top = s.vertices[0];
      for (int v : s.vertices)
        if (t.depth(v) < t.depth(top)) top = v;
      int seed = t.parent(top);
      if (seed < 0 || !(d == &fp.DA ? inA : inB)[seed]) {
        adj = false;
        adetail = "shrublet with top " + std::to_string(top) + " has its seed on the wrong side";
      }
    }
  add("adjacency", adj, adetail);

  long long maxW = static_cast<long long>(std::max(fp.WA.size(), fp.WB.size()));
  Rational bound = Rational(sw ? 12 : 4) * Rational(k) / Rational(fp.ell);
  add(sw ? "seeds<=12k/l" : "seeds<=4k/l", Rational(maxW) <= bound,
      "max|W| = " + std::to_string(maxW) + " > " + bound.str());

  bool small = true;
  for (auto* d : {&fp.DA, &fp.DB})
    for (const auto& s : *d)
      if (static_cast<int>(s.vertices.size()) > fp.ell) small = false;
  add("shrublet<=l", small, "a shrublet exceeds l vertices");

  if (sw) {
    bool no_internal = true;
    long long massB = 0, massA = 0;
    for (const auto& s : fp.DB) {
      if (s.vertices.empty()) continue;
      int top = *std::min_element(s.vertices.begin(), s.vertices.end(),
                                  [&](int a, int b) { return t.depth(a) < t.depth(b); });
      if (static_cast<int>(s.vertices.size()) != t.subtree_size(top)) no_internal = false;
      massB += static_cast<long long>(s.vertices.size());
    }
    for (const auto& s : fp.DA) {
      if (s.vertices.empty()) continue;
      int top = *std::min_element(s.vertices.begin(), s.vertices.end(),
                                  [&](int a, int b) { return t.depth(a) < t.depth(b); });
      if (static_cast<int>(s.vertices.size()) == t.subtree_size(top)) massA += static_cast<long long>(s.vertices.size());
    }
    add("no-internal-in-DB", no_internal, "DB' contains an internal tree");
    add("end-mass", massA >= massB,
        "end-tree mass of DA' " + std::to_string(massA) + " < mass of DB' " + std::to_string(massB));
  }
  return rep;
}

}  // namespace lks

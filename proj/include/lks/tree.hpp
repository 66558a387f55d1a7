#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lks/common.hpp"
#include "lks/graph.hpp"

namespace lks {

// Tree with a designated root. a "precedes" b (a is below b) iff b lies on
// the path from a to the root.
class RootedTree {
 public:
  RootedTree() = default;
  // parent[root] == -1, exactly one root.
  explicit RootedTree(std::vector<int> parent);
  static RootedTree from_edges(int n, const std::vector<std::pair<int, int>>& edges, int root);
  static RootedTree from_graph(const Graph& g, int root);

  int n() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& parents() const { return parent_; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
  int depth(int v) const { return depth_[v]; }
  int subtree_size(int v) const { return size_[v]; }
  const std::vector<int>& bfs_order() const { return order_; }
  bool below(int a, int b) const;  // a precedes b
  int distance(int a, int b) const;

  std::vector<std::pair<int, int>> edges() const;
  Graph to_graph() const;
  RootedTree rerooted(int r) const;
  VertexSet subtree_vertices(int v) const;  // v and everything below it
  // Degree-one vertices (both vertices of K2; none for K1).
  VertexSet leaves() const;
  // Non-root vertices without children.
  VertexSet rooted_leaves() const;

 private:
  std::vector<int> parent_;
  int root_ = -1;
  std::vector<std::vector<int>> children_, nbrs_;
  std::vector<int> depth_, size_, order_;
};

struct ColorStats {
  VertexSet Te, To;  // Te the larger class; on a tie the root's class
  int gap = 0;
};
ColorStats color_stats(const RootedTree& t);

struct SemiPartition {
  VertexSet U1, U2;
  int disc = 0;
};
// Maximum discrepancy semiindependent partition; requires n >= 2.
SemiPartition discrepancy(const RootedTree& t);

struct SemiCheck {
  bool semiindependent = false;
  bool independent = false;
  bool size_ok = false;
  int leaves_in_U1 = 0;
  int leaves_in_U2 = 0;
};
SemiCheck check_semiindependent(const RootedTree& t, const VertexSet& U1, const VertexSet& U2);

struct FullSubtree {
  int root = -1;
  VertexSet children;  // the chosen subset of Ch(root); empty only in the degenerate order-1 case
  VertexSet vertices;  // sorted
  int order = 0;
  int leaves = 0;  // leaves of the piece other than its root
};

enum class FullSubtreeMode { ByOrder, ByLeaves };
// Descends from the root of t. ByOrder: order in [target/2, target].
// ByLeaves: leaf count in [target/2, target], leaves counted as rooted_leaves.
FullSubtree full_subtree(const RootedTree& t, FullSubtreeMode mode, int target);
bool is_full_subtree(const RootedTree& t, const FullSubtree& f);

// Members must be connected, vertex-disjoint subsets of t.
bool c_balanced(const RootedTree& t, const std::vector<VertexSet>& family, const Rational& c, long long k);

// Vertex-disjoint paths on c+1 vertices whose internal vertices have degree 2.
// Each path is listed end to end.
std::vector<VertexSet> induced_path_family(const RootedTree& t, int c);
// Validity plus maximality of a family.
bool is_maximal_induced_path_family(const RootedTree& t, int c, const std::vector<VertexSet>& family);

enum class TreeGenMode { Labeled, Canonical };
// Labeled: every Prufer sequence, rooted at 0, order <= 10.
// Canonical: one tree per isomorphism class, rooted at a centroid, order <= 16.
void for_each_tree(int order, TreeGenMode mode, const std::function<void(const RootedTree&)>& fn);
std::vector<RootedTree> generate_trees(int order, TreeGenMode mode);
long long labeled_tree_count(int order);
RootedTree prufer_decode(const std::vector<int>& seq);

// Isomorphism-invariant string of the unrooted tree.
std::string canonical_form(const RootedTree& t);

}  // namespace lks

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lks/common.hpp"

namespace lks {

// Simple undirected graph on [0, n) with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return static_cast<int>(adj_.size()); }
  long long m() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  int min_degree() const;
  int max_degree() const;

  // Both return false when nothing changed.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  // Subgraph induced by vs; vertex i of the result is vs[i].
  Graph induced(const VertexSet& vs) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const;
  std::vector<std::vector<int>> adj_;
  long long m_ = 0;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph complete_graph(int n);
Graph complement(const Graph& g);

// Number of ordered pairs (x, y) in X x Y with xy an edge. For disjoint X, Y
// this is the edge count between them; with Y = V it is the degree sum of X.
long long edge_count(const Graph& g, const VertexSet& X, const VertexSet& Y);
int degree_into(const Graph& g, int v, const std::vector<char>& mask);
std::vector<char> mask_of(int n, const VertexSet& s);
VertexSet all_vertices(int n);

// e(X,Y)/|X|. Y must be disjoint from X or all of V.
Rational avg_deg(const Graph& g, const VertexSet& X, const VertexSet& Y);
Rational avg_deg(const Graph& g, const VertexSet& X);

struct LksClassification {
  int k = 0;
  VertexSet L, S;
  std::vector<char> large;  // large[v] == 1 iff v in L
  bool holds = false;
};

LksClassification classify_lks(const Graph& g, int k);

// Host preprocessing: trims L-S edges while |L| >= |S|+2, then drops S-S edges.
Graph normalize_host(const Graph& g, int k);

struct Core {
  VertexSet vertices;  // surviving vertices of the input, sorted; empty = no core
  Graph graph;         // induced on `vertices`
};

// Iteratively removes vertices of degree < d.
Core min_degree_core(const Graph& g, const Rational& d);

// Closest integer: floor when the fractional part is < 1/2, ceiling otherwise.
long long ci(double x);
long long ci(const Rational& x);

}  // namespace lks

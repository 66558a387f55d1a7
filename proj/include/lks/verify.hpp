#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lks/graph.hpp"
#include "lks/tree.hpp"

namespace lks {

// Red/blue coloring of K_m; red[edge_index(m, u, v)].
struct Coloring {
  int m = 0;
  std::vector<char> red;

  static int edge_index(int m, int u, int v);
  bool is_red(int u, int v) const { return red[edge_index(m, u, v)] != 0; }
  Graph red_graph() const;
  Graph blue_graph() const;
};

struct Counterexample {
  Graph g;
  int k = 0;
  RootedTree t{std::vector<int>{-1}};
};

struct VerifyReport {
  int n = 0;
  std::vector<int> ks;
  long long graphs = 0;      // enumerated (or read)
  long long lks_graphs = 0;  // (graph, k) pairs with the LKS property
  long long checks = 0;      // (graph, k, tree) triples embedded
  std::vector<Counterexample> counterexamples;
  std::map<std::string, long long> strategies;  // winning strategy -> count
  int shards = 1;
  int threads = 1;
  double seconds = 0;

  void merge(const VerifyReport& o);
};

struct VerifyOptions {
  std::optional<int> k;  // all k in [1, n) when empty
  bool allow_n7 = false;
  int threads = 0;  // 0 = OpenMP default, 1 = serial reference path
  int shard_bits = 6;
  long long timeout_ms = 60000;  // per backtracking call
};

// All labeled graphs on n vertices (n <= 6, or 7 with allow_n7) times every
// canonical tree of order k+1. Throws InputError past the cap.
VerifyReport lks_verify(int n, const VerifyOptions& opt = {});

// Same check over a given list of graphs (one graph6 stream).
VerifyReport lks_verify_graphs(const std::vector<Graph>& graphs, const VerifyOptions& opt = {});

// Does `host` contain every tree of order `order`?
bool is_tree_universal(const Graph& host, int order);

struct RamseyCheck {
  bool holds = false;
  std::optional<Coloring> witness;  // a coloring with neither side universal
  long long colorings = 0;          // examined after symmetry pruning
};

// Every 2-coloring of K_m has a red T_{l1+1}-universal or blue
// T_{l2+1}-universal side. m <= 8.
RamseyCheck ramsey_universal_check(int m, int l1, int l2, int threads = 0);

struct RamseyResult {
  int value = 0;
  Coloring witness;       // from the enumeration at m = value-1
  Coloring construction;  // lower_bound_coloring(l1, l2), star-free checked
  std::string endpoint;   // both-even pairs: which end of [l1+l2-1, l1+l2] occurs
  long long colorings = 0;
};

// Smallest m with ramsey_universal_check true; l1 + l2 <= cap <= 8.
RamseyResult ramsey_number(int l1, int l2, int cap = 8, int threads = 0);

// Red graph a regular circulant: K_{l1+l2-1} with red degree l1-1 when some l
// is odd, K_{l1+l2-2} with red degree l1-1 when both are even.
Coloring lower_bound_coloring(int l1, int l2);

// No red K_{1,l1} and no blue K_{1,l2}.
bool star_free(const Coloring& c, int l1, int l2);

}  // namespace lks

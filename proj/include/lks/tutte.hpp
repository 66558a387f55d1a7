#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lks/matching.hpp"

namespace lks {

// Graph with a positive rational weight on every edge.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n) : g_(n), w_(n) {}

  const Graph& graph() const { return g_; }
  int n() const { return g_.n(); }
  // Adds the edge or overwrites its weight. Weight must be positive.
  void set_edge(int u, int v, const Rational& w);
  Rational weight(int u, int v) const;  // 0 for a non-edge
  Rational wdeg(int v) const;
  Rational wdeg(int v, const std::vector<char>& mask) const;
  Rational max_weight() const;

 private:
  Graph g_;
  std::vector<std::vector<Rational>> w_;  // parallel to g_.neighbors(v)
};

// Weights file: one "u v w" line per edge, w decimal or a/b. Every edge of g
// must be listed exactly once; listed pairs must be edges of g.
WeightedGraph parse_weights(const Graph& g, const std::string& text);

enum class TutteCase { I = 1, II = 2 };

struct TutteStructure {
  TutteCase which = TutteCase::I;
  Matching M;
  int A = -1, B = -1;
  VertexSet Lstar;
  VertexSet Xprime;  // Case II only
  // bookkeeping from the construction
  VertexSet Q;
  Matching M0;
  std::string branch;    // "L0-L0 edge", "L0 empty", "L0 independent" or "fallback: ..."
  std::string primary_failure;  // set when a fallback was needed
};

// s is taken as the largest edge weight.
TutteStructure tutte_structure(const WeightedGraph& h, const VertexSet& L, const Rational& sigma, const Rational& K);

// Throws PreconditionError naming the first violated hypothesis.
void check_tutte_preconditions(const WeightedGraph& h, const VertexSet& L, const Rational& sigma, const Rational& K);

std::vector<BulletResult> check_tutte(const WeightedGraph& h, const VertexSet& L, const Rational& sigma,
                                      const Rational& K, const TutteStructure& ts);

enum class TutteFamily { Generic, LargeSideSeparator, HubSeparator, DenseL };

struct TutteInstance {
  WeightedGraph h;
  VertexSet L;
  Rational sigma, K;
};

// Seeded instance satisfying every hypothesis. Generic: S vertices with random
// weighted degree below (1+sigma)K into L, L topped up with L-L edges.
// LargeSideSeparator: L is the smaller side of a dense bipartite graph, topped
// up with L-L edges (sigma and K are chosen from N). HubSeparator: a small hub set
// inside L carries all edges of the rest of L and of S. DenseL: L is 60% of
// the vertices and spans a random graph of weighted degree about K.
TutteInstance make_tutte_instance(TutteFamily family, int N, std::uint64_t seed);

}  // namespace lks

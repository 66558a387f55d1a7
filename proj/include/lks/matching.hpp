#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lks/graph.hpp"

namespace lks {

struct Matching {
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  int size() const { return static_cast<int>(edges.size()); }
  VertexSet vertices() const;
  // mate[v] = partner or -1
  std::vector<int> mates(int n) const;
  static Matching from_mates(const std::vector<int>& mate);
};

// Disjoint edges, all present in g.
bool is_matching(const Graph& g, const Matching& m);

// Edmonds' blossom algorithm; maximum cardinality.
Matching max_matching(const Graph& g);
int matching_number(const Graph& g);

// Vertices missed by at least one maximum matching.
VertexSet gallai_edmonds_D(const Graph& g);

// K = the bipartite subgraph of g between W1 and W2. Requires disjoint sides,
// every vertex of W1 u W2 with K-degree >= |W1|/2, and |W1| <= |W2|.
Matching hall_cover_matching(const Graph& g, const VertexSet& W1, const VertexSet& W2);

// Hopcroft-Karp on the same K, no preconditions.
Matching bipartite_max_matching(const Graph& g, const VertexSet& W1, const VertexSet& W2);

bool is_factor_critical(const Graph& g);

struct GEComponent {
  VertexSet vertices;
  bool factor_critical = false;
};

struct GEDecomposition {
  VertexSet Q;
  Matching M;  // |Q| edges, each q in Q matched into its own component
  std::vector<GEComponent> components;  // components of g - Q
  Matching maximum;  // the maximum matching the construction started from
};

GEDecomposition gallai_edmonds(const Graph& g);

// Checks both structural properties from scratch; empty string when valid.
std::string check_ge(const Graph& g, const GEDecomposition& ge);

struct WeightSplit {
  std::vector<int> Ia, Ib;  // indices into alpha/beta
  bool used_fallback = false;
};

// alpha_i, beta_i in (0, delta]; a/sum(alpha) + b/sum(beta) <= 1.
// Result: sum alpha over Ia > a - delta and sum beta over Ib >= b.
WeightSplit weight_split(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, const Rational& a,
                         const Rational& b, const Rational& delta);
bool weight_split_valid(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, const Rational& a,
                        const Rational& b, const Rational& delta, const WeightSplit& w);

}  // namespace lks

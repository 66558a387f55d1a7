#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lks/common.hpp"
#include "lks/graph.hpp"
#include "lks/regularity.hpp"
#include "lks/tree.hpp"

namespace lks {

// map[x] = host vertex of pattern vertex x.
struct Embedding {
  std::vector<int> map;
};

enum class EmbedStatus { Found, NotFound, Timeout };
std::string to_string(EmbedStatus s);

struct EmbedOutcome {
  EmbedStatus status = EmbedStatus::NotFound;
  Embedding embedding;  // meaningful only when Found
  std::string strategy;
  long long nodes = 0;  // search nodes (backtracking) or placements
  std::string detail;
  bool found() const { return status == EmbedStatus::Found; }
};

struct EmbedCheck {
  bool ok = false;
  std::string violation;  // first one found, empty when ok
};

// Injectivity first, then every pattern edge.
EmbedCheck validate_embedding(const Graph& host, const Graph& pattern, const std::vector<int>& map);
EmbedCheck validate_embedding(const Graph& host, const RootedTree& pattern, const std::vector<int>& map);

// Rooted forest by parent pointers; -1 marks a root.
struct RootedForest {
  std::vector<int> parent;
  int n() const { return static_cast<int>(parent.size()); }
  static RootedForest from_tree(const RootedTree& t);
  Graph to_graph() const;
};

// min{deg(v, B) : v in A}; a huge value for empty A.
long long min_degree_into(const Graph& g, const VertexSet& A, const VertexSet& B);

struct GreedyMode {
  enum class Kind { MinDegree, Bipartite } kind = Kind::MinDegree;
  VertexSet V1, V2;  // bipartite: the smaller color class goes to V1, Te to V2
  static GreedyMode min_degree() { return {}; }
  static GreedyMode bipartite(VertexSet a, VertexSet b) { return {Kind::Bipartite, std::move(a), std::move(b)}; }
};

// Levelwise greedy. Throws PreconditionError when the degree bound fails.
EmbedOutcome greedy_embed(const Graph& g, const RootedTree& t, const GreedyMode& mode);

// U1 -> V1, non-leaf U2 -> V2, U2 leaves last next to their V1 neighbour.
EmbedOutcome embed_semiindependent(const Graph& g, const VertexSet& V1, const VertexSet& V2, const RootedTree& t,
                                   const VertexSet& U1, const VertexSet& U2);

enum class RootSide { Any, P, Q };

struct RegularPairOptions {
  bool avoid_P_prime = false;  // non-root images stay out of P'; needs |P \ P'| >= Delta
  bool avoid_Q_prime = false;
  RootSide root_side = RootSide::Any;  // forcing P needs |P'| >= Delta
};

struct RegularPairTrace {
  Rational Delta;
  VertexSet SP, SQ;
};

// Delta = (eps s + v(t)) / (d - 2 eps).
Rational regular_pair_delta(long long s, long long order, const Rational& eps, const Rational& d);

// Embeds t into P u Q with the root in P' u Q'. Regularity of (X, Y) is the
// caller's responsibility; when it fails the search can return NotFound.
EmbedOutcome embed_in_regular_pair(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& P,
                                   const VertexSet& Q, const VertexSet& Pp, const VertexSet& Qp, const RootedTree& t,
                                   const Rational& eps, const Rational& d, const RegularPairOptions& opt = {},
                                   RegularPairTrace* trace = nullptr);

struct FillParams {
  int mode = 1;  // 1, 2 or 3, by hypothesis set
  Rational eps{1, 20};
  Rational d{1, 2};
  long long tau = 2;
  Rational eta{1, 10};  // mode 3 only
};

struct FillQuantities {
  long long s = 0;
  Rational Delta, lambda1, lambda2;
  Rational degZX, degZY;  // average degrees from Z
  Rational dZX, dZY, dXY;
};

FillQuantities fill_quantities(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z,
                               const FillParams& p);

// Throws PreconditionError naming the first failed hypothesis. F is rooted at
// the vertex pre-placed on r.
void check_fill_hypotheses(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z,
                           const RootedTree& F, int r, const VertexSet& U, const FillParams& p);

// (c1), (c2) and (c3) for modes 1, 2 or (d) for mode 3, plus the embedding itself.
std::vector<BulletResult> check_fill_postconditions(const Graph& g, const VertexSet& X, const VertexSet& Y,
                                                    const VertexSet& Z, const RootedTree& F, int r,
                                                    const VertexSet& U, const FillParams& p,
                                                    const std::vector<int>& map);

// Postconditions are checked before returning; Found only when all of them hold.
EmbedOutcome fill_regular_pair(const Graph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z,
                               const RootedTree& F, int r, const VertexSet& U, const FillParams& p);

// Rooted forest F with O1 u O2 = V(F), O2 independent. Result has phi(O1) in A.
EmbedOutcome embed_with_leaf_matching(const Graph& h, const VertexSet& A, const VertexSet& B,
                                      const RootedForest& F, const VertexSet& O1, const VertexSet& O2, int f);

// Complete search. threads: 0 = OpenMP default, 1 = serial reference path.
EmbedOutcome backtracking_embed(const Graph& g, const RootedTree& t, long long timeout_ms = 60000, int threads = 0);
EmbedOutcome backtracking_embed_serial(const Graph& g, const RootedTree& t, long long timeout_ms = 60000);

struct DispatchOptions {
  std::string strategy = "auto";  // auto | greedy | semiind | extremal | backtrack
  long long timeout_ms = 60000;
  int threads = 0;
  std::optional<std::vector<VertexSet>> clusters;  // extremal partition hint (V_1..V_l)
  Rational gamma{1, 200};
};

// Throws PreconditionError unless G has the LKS property for k and v(T) = k+1.
EmbedOutcome embed_tree(const Graph& g, const RootedTree& t, int k, const DispatchOptions& opt = {});

}  // namespace lks

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lks/common.hpp"
#include "lks/graph.hpp"
#include "lks/matching.hpp"
#include "lks/tree.hpp"

namespace lks {

struct ExtremalPartition {
  std::vector<VertexSet> clusters;  // V_1..V_lambda
  VertexSet residual;               // V~, possibly empty
};

// One line per cluster; a final line starting with '~' lists V~.
ExtremalPartition parse_partition(const std::string& text);

struct ExtremalReport {
  std::vector<BulletResult> bullets;
  bool ok = false;
  int lambda = 0;
  long long theta = 0;  // ci(n/k)
};

// Throws InputError unless clusters and V~ partition V(G).
ExtremalReport validate_extremal(const Graph& g, const ExtremalPartition& p, const Rational& beta,
                                 const Rational& sigma, int k);

// Exceptional-vertex counts from the cluster-properties claim, for constant c.
std::vector<BulletResult> check_cluster_claim(const Graph& g, const ExtremalPartition& p, const Rational& beta, int k,
                                              const Rational& c = Rational(1));

struct ClusterSets {
  int k = 0;
  Rational gamma;
  long long theta = 0;
  VertexSet L, S;
  bool residual_empty = true;
  std::vector<VertexSet> clusters;
  std::vector<VertexSet> Li, S_diamond, S_sharp, S_heart, S_cone, X;  // S_cone: deg(v, L^i) >= k/(3 theta)
  std::vector<int> abundant;  // indices i with |L^i| >= (k+1)/2; empty means Deficient
  bool is_abundant() const { return !abundant.empty(); }
};

ClusterSets cluster_sets(const Graph& g, const ExtremalPartition& p, int k, const Rational& gamma);

// Pairs (i, j), i < j, with L^i and L^j intersecting.
std::vector<std::pair<int, int>> overlapping_L(const ClusterSets& cs);

struct ConnectingStructure {
  enum class Kind { A1, A2, A3, StartVertex, Cones, IdealPartition, BigComponent } kind = Kind::A1;
  int i0 = -1, i1 = -1, i2 = -1;
  std::pair<int, int> edge{-1, -1};  // A1, A2: endpoint in L^{i1} first
  int vertex = -1;                   // A3: x0; StartVertex: v; BigComponent: r
  Matching E, J;                     // Cones
  VertexSet U1, U2;                  // IdealPartition
  VertexSet component;               // BigComponent
  std::string note;                  // which construction produced it
};
std::string to_string(ConnectingStructure::Kind k);

// Each search checks its hypotheses (Deficient, V~ empty, the L^i partition L)
// and re-verifies its result against G before returning.
ConnectingStructure find_connecting_edge(const Graph& g, const ClusterSets& cs);
ConnectingStructure find_start_vertex(const Graph& g, const ClusterSets& cs);
ConnectingStructure deficient_cones(const Graph& g, const ClusterSets& cs);

// Empty string when every defining inequality holds.
std::string verify_structure(const Graph& g, const ClusterSets& cs, const ConnectingStructure& s);

struct IdealResult {
  std::optional<ConnectingStructure> partition;
  std::string reason;  // set when partition is empty
};

// An l-ideal semiindependent partition: U2 independent, |U1| <= |U2|, and at
// least l leaves on each side.
bool is_ideal(const RootedTree& t, const VertexSet& U1, const VertexSet& U2, int l);
IdealResult find_ideal_partition(const RootedTree& t, int l);

// First r by id such that T - r has a component of order in [lo, hi].
std::optional<ConnectingStructure> big_component_vertex(const RootedTree& t, int lo, int hi);

}  // namespace lks

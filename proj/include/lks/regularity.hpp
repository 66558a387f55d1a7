#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lks/tutte.hpp"

namespace lks {

// e(A,B)/(|A||B|) for disjoint nonempty A, B.
Rational pair_density(const Graph& g, const VertexSet& A, const VertexSet& B);

enum class RegularityVerdict { Regular, Irregular, SampledLikelyRegular };
std::string to_string(RegularityVerdict v);

enum class RegularityMode {
  Exact,    // |A|,|B| <= 16
  Sampled,  // uniform subsets of the smallest significant sizes
  Auto,     // complete/empty pairs certified directly, else exact if small, else sampled
};

struct RegularityOptions {
  RegularityMode mode = RegularityMode::Exact;
  long long trials = 10000;
  std::uint64_t seed = 1;
};

struct RegularPairReport {
  Rational density;
  Rational eps;
  RegularityVerdict verdict = RegularityVerdict::Regular;
  std::optional<std::pair<VertexSet, VertexSet>> witness;
  Rational witness_density;
  bool certified = false;  // verdict proven (exact enumeration or 0/1 density)
};

// Smallest size that is significant in a set of n vertices: floor(eps n) + 1.
long long min_significant(long long n, const Rational& eps);

RegularPairReport regular_pair_test(const Graph& g, const VertexSet& A, const VertexSet& B, const Rational& eps,
                                    const RegularityOptions& opt = {});

// Re-derives the witness deviation from scratch.
bool witness_valid(const Graph& g, const VertexSet& A, const VertexSet& B, const RegularPairReport& r);

// {v in X : deg(v, W) >= (d - 2 eps)|W|}. Degrees are counted into W itself,
// which is what the atypicality bounds need.
VertexSet typical_vertices(const Graph& g, const VertexSet& X, const VertexSet& W, const Rational& eps,
                           const Rational& d);

struct ClusterEdge {
  int a = -1, b = -1;  // cluster indices, a < b
  Rational density;
  Rational weight;  // e(C_a, C_b)/|C_a|, equal clusters so symmetric
  bool certified = false;
};

struct ClusterGraph {
  std::vector<VertexSet> clusters;
  bool has_exceptional = false;  // clusters[0] is V0 when set
  std::vector<ClusterEdge> edges;
  std::vector<char> large;  // L-type flag per cluster
  WeightedGraph weighted;   // on cluster indices; V0 isolated
  Graph cleaned;            // G with the deleted edges removed
};

struct ClusterOptions {
  Rational eps{1, 100};
  Rational density_threshold{1, 80000};  // gamma^2/2 for the default gamma
  Rational degree_threshold{0};
  bool has_exceptional = false;
  RegularityOptions regularity{RegularityMode::Auto, 2000, 1};
  std::function<bool(int)> in_L;  // vertex predicate for L-type clusters; unset = never
};

ClusterGraph build_cluster_graph(const Graph& g, const std::vector<VertexSet>& partition, const ClusterOptions& opt);

struct PackednessParams {
  Rational lambda;
  long long tau = 0;
  int i = 1;
  Rational mu, nu;  // filled by is_packed from G, Z, X, Y
};

bool is_packed(const Graph& g, const VertexSet& U, const VertexSet& X, const VertexSet& Y, const VertexSet& Z,
               PackednessParams& params);

}  // namespace lks

#pragma once

#include <string>
#include <vector>

#include "lks/tree.hpp"

namespace lks {

struct Shrublet {
  VertexSet vertices;  // sorted
  int top = -1;        // vertex closest to the root
  int seed = -1;       // parent of top
  bool end_tree = false;  // holds every descendant of top
};

enum class FineVariant { Plain, Switched };

struct FinePartition {
  FineVariant variant = FineVariant::Plain;
  int ell = 0;
  int root = -1;
  VertexSet cut_vertices;  // x_1, x_2, ... in selection order (last is the root)
  VertexSet WA, WB;
  std::vector<Shrublet> DA, DB;
  bool swapped = false;  // switched variant: A and B roles were exchanged
};

// Rooted at t.root(); 1 <= ell <= v(T)-1.
FinePartition fine_partition(const RootedTree& t, int ell);
FinePartition switched_fine_partition(const RootedTree& t, int ell);

struct FineReport {
  std::vector<BulletResult> bullets;
  bool all_pass() const;
};

FineReport validate_fine_partition(const RootedTree& t, const FinePartition& fp, long long k);

}  // namespace lks

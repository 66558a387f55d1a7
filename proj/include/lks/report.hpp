#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lks/common.hpp"
#include "lks/embed.hpp"
#include "lks/extremal.hpp"
#include "lks/matching.hpp"
#include "lks/regularity.hpp"
#include "lks/tree_cut.hpp"
#include "lks/tutte.hpp"
#include "lks/verify.hpp"

namespace lks {

using Json = nlohmann::ordered_json;

extern const char* const kVersion;

Json to_json(const Rational& r);  // "a/b" string, exact
Json to_json(const ToolkitConfig& c);
Json to_json(const std::vector<BulletResult>& bullets);
Json to_json(const Matching& m);
Json graph_json(const Graph& g);  // n, m, graph6
Json to_json(const Coloring& c);
Json to_json(const VerifyReport& r);
Json to_json(const RamseyResult& r);
Json to_json(const EmbedOutcome& o);
Json to_json(const FinePartition& fp);
Json to_json(const GEDecomposition& ge);
Json to_json(const TutteStructure& ts);
Json to_json(const RegularPairReport& r);
Json to_json(const ConnectingStructure& s);
Json to_json(const ClusterSets& cs);

// One per CLI run. Timing sits outside `result`, so identical argv and seed
// give an identical result payload.
struct RunReport {
  std::string command;
  ToolkitConfig config;
  Json result = Json::object();
  int exit_code = 0;
  double seconds = 0;

  Json to_json() const;
};

}  // namespace lks

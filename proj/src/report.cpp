#include "lks/report.hpp"

#include "lks/io.hpp"

namespace lks {

const char* const kVersion = "0.1.0";

namespace {

Json pairs(const std::vector<std::pair<int, int>>& e) {
  Json a = Json::array();
  for (auto [u, v] : e) a.push_back({u, v});
  return a;
}

Json sets(const std::vector<VertexSet>& s) {
  Json a = Json::array();
  for (const auto& x : s) a.push_back(x);
  return a;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const ToolkitConfig& c) {
  Json j;
  j["q"] = to_json(c.q);
  j["beta"] = to_json(c.beta);
  j["gamma"] = to_json(c.gamma);
  j["sigma"] = to_json(c.sigma);
  j["alpha"] = to_json(c.alpha);
  j["eta"] = to_json(c.eta);
  j["omega"] = to_json(c.omega);
  j["eps"] = to_json(c.eps);
  j["tau"] = to_json(c.tau);
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  return j;
}

Json to_json(const std::vector<BulletResult>& bullets) {
  Json a = Json::array();
  for (const auto& b : bullets) {
    Json j{{"name", b.name}, {"pass", b.pass}};
    if (!b.detail.empty()) j["detail"] = b.detail;
    a.push_back(j);
  }
  return a;
}

Json to_json(const Matching& m) { return pairs(m.edges); }

Json graph_json(const Graph& g) {
  return {{"n", g.n()}, {"m", g.m()}, {"graph6", to_graph6(g)}};
}

Json to_json(const Coloring& c) {
  return {{"m", c.m}, {"red_graph6", to_graph6(c.red_graph())}, {"red_edges", pairs(c.red_graph().edges())}};
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["n"] = r.n;
  j["ks"] = r.ks;
  j["graphs"] = r.graphs;
  j["lks_graphs"] = r.lks_graphs;
  j["checks"] = r.checks;
  j["counterexample_count"] = r.counterexamples.size();
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) {
    Json x = graph_json(c.g);
    x["k"] = c.k;
    x["tree_parents"] = Json::array();
    for (int v = 0; v < c.t.n(); ++v) x["tree_parents"].push_back(c.t.parent(v));
    ce.push_back(x);
  }
  j["counterexamples"] = ce;
  Json st = Json::object();
  for (const auto& [s, n] : r.strategies) st[s] = n;
  j["strategies"] = st;
  j["shards"] = r.shards;
  return j;
}

Json to_json(const RamseyResult& r) {
  return {{"R", r.value},
          {"endpoint", r.endpoint},
          {"colorings_examined", r.colorings},
          {"witness", to_json(r.witness)},
          {"construction", to_json(r.construction)}};
}

Json to_json(const EmbedOutcome& o) {
  Json j{{"status", to_string(o.status)}, {"strategy", o.strategy}, {"nodes", o.nodes}};
  if (o.found()) j["map"] = o.embedding.map;
  if (!o.detail.empty()) j["detail"] = o.detail;
  return j;
}

Json to_json(const FinePartition& fp) {
  Json j;
  j["variant"] = fp.variant == FineVariant::Plain ? "plain" : "switched";
  j["ell"] = fp.ell;
  j["root"] = fp.root;
  j["cut_vertices"] = fp.cut_vertices;
  j["WA"] = fp.WA;
  j["WB"] = fp.WB;
  auto shrubs = [](const std::vector<Shrublet>& d) {
    Json a = Json::array();
    for (const auto& s : d)
      a.push_back({{"vertices", s.vertices}, {"top", s.top}, {"seed", s.seed}, {"end_tree", s.end_tree}});
    return a;
  };
  j["DA"] = shrubs(fp.DA);
  j["DB"] = shrubs(fp.DB);
  j["swapped"] = fp.swapped;
  return j;
}

Json to_json(const GEDecomposition& ge) {
  Json comps = Json::array();
  for (const auto& c : ge.components) comps.push_back({{"vertices", c.vertices}, {"factor_critical", c.factor_critical}});
  return {{"Q", ge.Q}, {"M", to_json(ge.M)}, {"components", comps}, {"maximum_matching", to_json(ge.maximum)}};
}

Json to_json(const TutteStructure& ts) {
  Json j{{"case", ts.which == TutteCase::I ? "I" : "II"},
         {"M", to_json(ts.M)},
         {"A", ts.A},
         {"B", ts.B},
         {"Lstar", ts.Lstar},
         {"Q", ts.Q},
         {"M0", to_json(ts.M0)},
         {"branch", ts.branch}};
  if (ts.which == TutteCase::II) j["Xprime"] = ts.Xprime;
  if (!ts.primary_failure.empty()) j["primary_failure"] = ts.primary_failure;
  return j;
}

Json to_json(const RegularPairReport& r) {
  Json j{{"density", to_json(r.density)},
         {"eps", to_json(r.eps)},
         {"verdict", to_string(r.verdict)},
         {"certified", r.certified}};
  if (r.witness) {
    j["witness"] = {{"A", r.witness->first}, {"B", r.witness->second}, {"density", to_json(r.witness_density)}};
  }
  return j;
}

Json to_json(const ConnectingStructure& s) {
  using K = ConnectingStructure::Kind;
  Json j{{"kind", to_string(s.kind)}};
  switch (s.kind) {
    case K::A1:
    case K::A2:
      j["i1"] = s.i1;
      j["i2"] = s.i2;
      j["edge"] = {s.edge.first, s.edge.second};
      break;
    case K::A3:
      j["i1"] = s.i1;
      j["i2"] = s.i2;
      j["x0"] = s.vertex;
      break;
    case K::StartVertex:
      j["i0"] = s.i0;
      j["v"] = s.vertex;
      break;
    case K::Cones:
      j["i0"] = s.i0;
      j["E"] = to_json(s.E);
      j["J"] = to_json(s.J);
      break;
    case K::IdealPartition:
      j["U1"] = s.U1;
      j["U2"] = s.U2;
      break;
    case K::BigComponent:
      j["r"] = s.vertex;
      j["component"] = s.component;
      break;
  }
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json to_json(const ClusterSets& cs) {
  return {{"k", cs.k},     {"gamma", to_json(cs.gamma)}, {"theta", cs.theta},       {"L", cs.L},
          {"S", cs.S},     {"Li", sets(cs.Li)},          {"S_diamond", sets(cs.S_diamond)},
          {"S_sharp", sets(cs.S_sharp)}, {"S_heart", sets(cs.S_heart)}, {"abundant", cs.abundant}};
}

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["seed"] = config.seed;
  j["config"] = lks::to_json(config);
  j["result"] = result;
  j["exit_code"] = exit_code;
  j["timing"] = {{"seconds", seconds}};
  return j;
}

}  // namespace lks

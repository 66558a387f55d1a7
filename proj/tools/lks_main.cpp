// lks: command-line front end. One JSON report per run on stdout (or --report FILE).
// Exit codes: 0 success/Found, 1 NotFound or counterexample, 2 input or
// precondition error, 3 timeout, 4 internal error.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "lks/extremal.hpp"
#include "lks/io.hpp"
#include "lks/report.hpp"

using namespace lks;

namespace {

enum Exit { kOk = 0, kNotFound = 1, kInput = 2, kTimeout = 3, kInternal = 4 };

struct Constants {
  std::string q, beta, gamma, sigma, alpha, eta, omega, eps, tau;
};

void set_constant(const std::string& text, Rational& slot) {
  if (!text.empty()) slot = Rational::parse(text);
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

RootedTree load_tree(const std::string& path, int root) {
  return root >= 0 ? parse_tree(read_file(path), root) : parse_tree(read_file(path));
}

// Inline "0,1,2" or "@file".
VertexSet load_list(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return parse_vertex_list(read_file(arg.substr(1)));
  return parse_vertex_list(arg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lks: tree embedding in LKS hosts, with exhaustive small-case checks"};
  app.require_subcommand(1);
  app.fallthrough();

  ToolkitConfig cfg;
  Constants cs;
  std::string report_path;
  app.add_option("--seed", cfg.seed, "Random seed (LKS_SEED overrides)");
  app.add_option("--threads", cfg.threads, "Worker cap, 0 = all available");
  app.add_option("--q", cs.q, "Constant q (default 1/2)");
  app.add_option("--beta", cs.beta, "Constant beta (default 1/2000)");
  app.add_option("--gamma", cs.gamma, "Constant gamma (default 1/200)");
  app.add_option("--sigma", cs.sigma, "Constant sigma (default 1/20)");
  app.add_option("--alpha", cs.alpha, "Constant alpha (default 1/100)");
  app.add_option("--eta", cs.eta, "Constant eta (default 1/10)");
  app.add_option("--omega", cs.omega, "Constant omega (default 1/5)");
  app.add_option("--eps", cs.eps, "Constant eps (default 1/100)");
  app.add_option("--tau", cs.tau, "Constant tau (default 2)");
  app.add_option("--report", report_path, "Write the JSON report here instead of stdout");

  RunReport rep;
  std::function<int()> run;

  // embed
  auto* embed = app.add_subcommand("embed", "Embed a tree of order k+1 into an LKS host");
  std::string e_graph, e_tree, e_strategy = "auto", e_partition;
  int e_k = 0, e_root = -1;
  long long e_timeout = 60000;
  embed->add_option("--graph", e_graph, "Host graph (graph6 or edge list)")->required();
  embed->add_option("--tree", e_tree, "Tree file: 'n root' + parents, or an edge list with --root")->required();
  embed->add_option("--k", e_k, "k; the tree must have k+1 vertices")->required();
  embed->add_option("--strategy", e_strategy, "auto|greedy|semiind|extremal|backtrack");
  embed->add_option("--timeout-ms", e_timeout, "Backtracking budget");
  embed->add_option("--root", e_root, "Root for an edge-list tree");
  embed->add_option("--partition", e_partition, "Cluster partition hint for the extremal strategy");
  embed->callback([&] {
    run = [&] {
      auto g = load_graph(e_graph);
      auto t = load_tree(e_tree, e_root);
      DispatchOptions opt;
      opt.strategy = e_strategy;
      opt.timeout_ms = e_timeout;
      opt.threads = cfg.threads;
      opt.gamma = cfg.gamma;
      if (!e_partition.empty()) opt.clusters = parse_partition(read_file(e_partition)).clusters;
      auto out = embed_tree(g, t, e_k, opt);
      if (out.found())
        for (int x = 0; x < t.n(); ++x) std::cout << x << "→" << out.embedding.map[x] << "\n";
      rep.result = to_json(out);
      if (out.status == EmbedStatus::Timeout) return int(kTimeout);
      return out.found() ? int(kOk) : int(kNotFound);
    };
  });

  // verify-lks
  auto* verify = app.add_subcommand("verify-lks", "Exhaustive LKS check on small graphs");
  int v_n = 0, v_k = 0;
  bool v_all = false, v_n7 = false;
  std::string v_g6;
  verify->add_option("--n", v_n, "Order (n <= 6; 7 with --allow-n7)");
  auto* vk = verify->add_option("--k", v_k, "Single k in [1, n)");
  verify->add_flag("--all-k", v_all, "Every k in [1, n) (default)")->excludes(vk);
  verify->add_flag("--allow-n7", v_n7, "Permit n = 7");
  verify->add_option("--graph6", v_g6, "Check the graphs of a graph6 stream instead of enumerating");
  verify->callback([&] {
    run = [&] {
      VerifyOptions opt;
      if (*vk) opt.k = v_k;
      opt.allow_n7 = v_n7;
      opt.threads = cfg.threads;
      VerifyReport r;
      if (!v_g6.empty()) {
        r = lks_verify_graphs(parse_graph6_stream(read_file(v_g6)), opt);
      } else {
        if (v_n <= 0) throw InputError("verify-lks: --n or --graph6 is required");
        r = lks_verify(v_n, opt);
      }
      rep.result = to_json(r);
      return r.counterexamples.empty() ? int(kOk) : int(kNotFound);
    };
  });

  // ramsey
  auto* ramsey = app.add_subcommand("ramsey", "Tree-family Ramsey number by coloring enumeration");
  int r_l1 = 0, r_l2 = 0, r_cap = 8;
  ramsey->add_option("--l1", r_l1, "Red trees have order l1+1")->required();
  ramsey->add_option("--l2", r_l2, "Blue trees have order l2+1")->required();
  ramsey->add_option("--cap", r_cap, "Largest m to enumerate (<= 8)");
  ramsey->callback([&] {
    run = [&] {
      rep.result = to_json(ramsey_number(r_l1, r_l2, r_cap, cfg.threads));
      return int(kOk);
    };
  });

  // fine-partition
  auto* fine = app.add_subcommand("fine-partition", "Cut a tree into a fine partition and validate it");
  std::string f_tree;
  int f_ell = 0, f_root = -1;
  long long f_k = -1;
  bool f_switched = false;
  fine->add_option("--tree", f_tree, "Tree file")->required();
  fine->add_option("--ell", f_ell, "ell in [1, v(T)-1]")->required();
  fine->add_flag("--switched", f_switched, "Switched variant");
  fine->add_option("--k", f_k, "k for the size bounds (default v(T)-1)");
  fine->add_option("--root", f_root, "Root for an edge-list tree");
  fine->callback([&] {
    run = [&] {
      auto t = load_tree(f_tree, f_root);
      auto fp = f_switched ? switched_fine_partition(t, f_ell) : fine_partition(t, f_ell);
      auto v = validate_fine_partition(t, fp, f_k >= 0 ? f_k : t.n() - 1);
      rep.result = {{"partition", to_json(fp)}, {"bullets", to_json(v.bullets)}, {"valid", v.all_pass()}};
      return v.all_pass() ? int(kOk) : int(kNotFound);
    };
  });

  // gallai-edmonds
  auto* ge = app.add_subcommand("gallai-edmonds", "Gallai-Edmonds structure of a graph");
  std::string ge_graph;
  ge->add_option("--graph", ge_graph, "Graph file")->required();
  ge->callback([&] {
    run = [&] {
      auto g = load_graph(ge_graph);
      auto d = gallai_edmonds(g);
      auto err = check_ge(g, d);
      rep.result = to_json(d);
      rep.result["valid"] = err.empty();
      if (!err.empty()) rep.result["violation"] = err;
      return err.empty() ? int(kOk) : int(kNotFound);
    };
  });

  // tutte
  auto* tutte = app.add_subcommand("tutte", "Weighted Tutte-type matching structure");
  std::string t_graph, t_weights, t_L, t_K;
  tutte->add_option("--graph", t_graph, "Graph file")->required();
  tutte->add_option("--weights", t_weights, "'u v w' lines, one per edge")->required();
  tutte->add_option("--Lset", t_L, "File listing the vertices of L")->required();
  tutte->add_option("--K", t_K, "K")->required();
  tutte->callback([&] {
    run = [&] {
      auto g = load_graph(t_graph);
      auto h = parse_weights(g, read_file(t_weights));
      auto L = normalized(parse_vertex_list(read_file(t_L)));
      auto K = Rational::parse(t_K);
      check_tutte_preconditions(h, L, cfg.sigma, K);
      auto ts = tutte_structure(h, L, cfg.sigma, K);
      auto bullets = check_tutte(h, L, cfg.sigma, K, ts);
      bool ok = std::all_of(bullets.begin(), bullets.end(), [](const BulletResult& b) { return b.pass; });
      rep.result = {{"structure", to_json(ts)}, {"bullets", to_json(bullets)}, {"valid", ok}};
      return ok ? int(kOk) : int(kNotFound);
    };
  });

  // regular-test
  auto* reg = app.add_subcommand("regular-test", "eps-regularity of a pair (A, B)");
  std::string g_graph, g_A, g_B;
  bool g_exact = false;
  long long g_trials = 0;
  reg->add_option("--graph", g_graph, "Graph file")->required();
  reg->add_option("--A", g_A, "Vertex list, inline '0,1,2' or @file")->required();
  reg->add_option("--B", g_B, "Vertex list, inline or @file")->required();
  auto* ex = reg->add_flag("--exact", g_exact, "Exact enumeration (|A|, |B| <= 16)");
  reg->add_option("--trials", g_trials, "Sampled mode with this many trials")->excludes(ex);
  reg->callback([&] {
    run = [&] {
      auto g = load_graph(g_graph);
      RegularityOptions opt;
      opt.seed = cfg.seed;
      if (g_exact) {
        opt.mode = RegularityMode::Exact;
      } else if (g_trials > 0) {
        opt.mode = RegularityMode::Sampled;
        opt.trials = g_trials;
      } else {
        opt.mode = RegularityMode::Auto;
      }
      auto r = regular_pair_test(g, normalized(load_list(g_A)), normalized(load_list(g_B)), cfg.eps, opt);
      rep.result = to_json(r);
      return int(kOk);
    };
  });

  // extremal
  auto* extr = app.add_subcommand("extremal", "Validate an extremal partition and search its structures");
  std::string x_graph, x_part, x_find;
  int x_k = 0;
  extr->add_option("--graph", x_graph, "Graph file")->required();
  extr->add_option("--partition", x_part, "One cluster per line, '~' line for V~")->required();
  extr->add_option("--k", x_k, "k")->required();
  extr->add_option("--find", x_find, "edge|start|cones")->check(CLI::IsMember({"edge", "start", "cones"}));
  extr->callback([&] {
    run = [&] {
      auto g = load_graph(x_graph);
      auto p = parse_partition(read_file(x_part));
      auto v = validate_extremal(g, p, cfg.beta, cfg.sigma, x_k);
      rep.result["bullets"] = to_json(v.bullets);
      rep.result["valid"] = v.ok;
      rep.result["lambda"] = v.lambda;
      rep.result["theta"] = v.theta;
      if (!v.ok) return int(kNotFound);
      if (x_find.empty()) return int(kOk);
      auto sets = cluster_sets(g, p, x_k, cfg.gamma);
      rep.result["cluster_sets"] = to_json(sets);
      ConnectingStructure s;
      if (x_find == "edge")
        s = find_connecting_edge(g, sets);
      else if (x_find == "start")
        s = find_start_vertex(g, sets);
      else
        s = deficient_cones(g, sets);
      auto err = verify_structure(g, sets, s);
      rep.result["structure"] = to_json(s);
      rep.result["structure_valid"] = err.empty();
      if (!err.empty()) throw InternalError("extremal: structure failed verification: " + err);
      return int(kOk);
    };
  });

  // gen-trees
  auto* gen = app.add_subcommand("gen-trees", "Enumerate trees of a given order");
  int t_order = 0;
  std::string t_mode = "canonical";
  bool t_count = false;
  gen->add_option("--order", t_order, "Tree order")->required();
  gen->add_option("--mode", t_mode, "labeled|canonical")->check(CLI::IsMember({"labeled", "canonical"}));
  gen->add_flag("--count-only", t_count, "Skip the per-tree lines");
  gen->callback([&] {
    run = [&] {
      if (t_order < 1 || t_order > 12) throw InputError("gen-trees: order must lie in [1, 12]");
      auto mode = t_mode == "labeled" ? TreeGenMode::Labeled : TreeGenMode::Canonical;
      long long count = 0;
      for_each_tree(t_order, mode, [&](const RootedTree& t) {
        ++count;
        if (t_count) return;
        for (int v = 0; v < t.n(); ++v) std::cout << t.parent(v) << (v + 1 == t.n() ? '\n' : ' ');
      });
      rep.result = {{"order", t_order}, {"mode", t_mode}, {"count", count}};
      return int(kOk);
    };
  });

  auto start = std::chrono::steady_clock::now();
  auto emit = [&](int code) {
    rep.exit_code = code;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string text = rep.to_json().dump(2);
    if (report_path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(report_path);
      out << text << "\n";
    }
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    rep.result = {{"error", e.what()}};
    return emit(kInput);
  }
  rep.command = app.get_subcommands().front()->get_name();

  try {
    if (const char* env = std::getenv("LKS_SEED")) {
      try {
        cfg.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw InputError(std::string("LKS_SEED is not an unsigned integer: ") + env);
      }
    }
    set_constant(cs.q, cfg.q);
    set_constant(cs.beta, cfg.beta);
    set_constant(cs.gamma, cfg.gamma);
    set_constant(cs.sigma, cfg.sigma);
    set_constant(cs.alpha, cfg.alpha);
    set_constant(cs.eta, cfg.eta);
    set_constant(cs.omega, cfg.omega);
    set_constant(cs.eps, cfg.eps);
    set_constant(cs.tau, cfg.tau);
    cfg.validate();
    if (cfg.threads < 0) throw InputError("--threads must be non-negative");
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    rep.config = cfg;
    return emit(run());
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    rep.config = cfg;
    rep.result = {{"error", e.what()}};
    return emit(kInput);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    rep.config = cfg;
    rep.result = {{"error", e.what()}};
    return emit(kInput);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    rep.result["error"] = e.what();
    return emit(kInternal);
  }
}

// Serial reference vs OpenMP sharding for the exhaustive kernels.
//   ./bench_verify --benchmark_filter=Verify

#include <benchmark/benchmark.h>
#include <omp.h>

#include "lks/embed.hpp"
#include "lks/verify.hpp"

using namespace lks;

namespace {

int threads_arg(const benchmark::State& st) {
  return st.range(0) == 0 ? omp_get_max_threads() : static_cast<int>(st.range(0));
}

void BM_VerifySerial(benchmark::State& st) {
  VerifyOptions o;
  o.threads = 1;
  for (auto _ : st) {
    auto r = lks_verify(static_cast<int>(st.range(0)), o);
    benchmark::DoNotOptimize(r.checks);
  }
}

void BM_VerifyParallel(benchmark::State& st) {
  VerifyOptions o;
  o.threads = threads_arg(st);
  for (auto _ : st) {
    auto r = lks_verify(static_cast<int>(st.range(1)), o);
    benchmark::DoNotOptimize(r.checks);
  }
  st.counters["threads"] = o.threads;
}

void BM_RamseySerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(ramsey_universal_check(6, 3, 3, 1).holds);
}

void BM_RamseyParallel(benchmark::State& st) {
  int t = threads_arg(st);
  for (auto _ : st) benchmark::DoNotOptimize(ramsey_universal_check(6, 3, 3, t).holds);
  st.counters["threads"] = t;
}

// P12 into K_{5,7}: the path needs 6 vertices per side, so the search is
// exhaustive and ends NotFound.
struct Hard {
  Graph g;
  RootedTree t{std::vector<int>{-1}};
};

Hard hard_instance() {
  Hard h;
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 5; ++u)
    for (int v = 5; v < 12; ++v) e.emplace_back(u, v);
  h.g = build_graph(12, e);
  std::vector<int> parent(12);
  for (int i = 0; i < 12; ++i) parent[i] = i - 1;
  h.t = RootedTree(parent);
  return h;
}

void BM_BacktrackSerial(benchmark::State& st) {
  auto h = hard_instance();
  for (auto _ : st) benchmark::DoNotOptimize(backtracking_embed_serial(h.g, h.t, 60000).nodes);
}

void BM_BacktrackParallel(benchmark::State& st) {
  auto h = hard_instance();
  int t = threads_arg(st);
  for (auto _ : st) benchmark::DoNotOptimize(backtracking_embed(h.g, h.t, 60000, t).nodes);
  st.counters["threads"] = t;
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Args({0, 5})->Args({0, 6})->Args({2, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RamseySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RamseyParallel)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BacktrackSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BacktrackParallel)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

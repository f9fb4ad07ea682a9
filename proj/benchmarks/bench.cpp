#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "plsc/bug.hpp"
#include "plsc/compact_brick.hpp"
#include "plsc/completion.hpp"
#include "plsc/extension.hpp"
#include "plsc/io.hpp"
#include "plsc/matching.hpp"
#include "plsc/oracle.hpp"

using namespace plsc;

namespace {

// Cyclic square with rows, columns and symbols shuffled.
Grid shuffled_cyclic(int n, std::mt19937_64& rng) {
  std::vector<int> pr(n), pc(n), ps(n);
  std::iota(pr.begin(), pr.end(), 0);
  std::iota(pc.begin(), pc.end(), 0);
  std::iota(ps.begin(), ps.end(), 1);
  std::shuffle(pr.begin(), pr.end(), rng);
  std::shuffle(pc.begin(), pc.end(), rng);
  std::shuffle(ps.begin(), ps.end(), rng);
  Grid g(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = ps[(pr[i] + pc[j]) % n];
  return g;
}

void BM_HallComplete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  Grid ls = shuffled_cyclic(n, rng);
  Grid rect(ls.begin(), ls.begin() + n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(hall_complete(rect));
}
BENCHMARK(BM_HallComplete)->Arg(7)->Arg(16)->Arg(32);

void BM_KoenigDecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  Grid ls = shuffled_cyclic(n, rng);
  BinMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, ls[i][j] <= n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(koenig_decompose(m, n / 2));
}
BENCHMARK(BM_KoenigDecompose)->Arg(8)->Arg(32);

void BM_CruseEmbed(benchmark::State& state) {
  Grid g = fixtures::cruse();
  for (int i = 4; i < 6; ++i) g[i].assign(6, 0);
  Plsc b = from_pls(g);
  Box box = Box::corner(6, 4, 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(cruse_embed(b, box));
}
BENCHMARK(BM_CruseEmbed);

void BM_SecondaryGw6(benchmark::State& state) {
  Plsc b = from_pls(fixtures::gw6());
  for (auto _ : state) benchmark::DoNotOptimize(secondary_extend(b));
}
BENCHMARK(BM_SecondaryGw6)->Unit(benchmark::kMillisecond);

void BM_SecondaryCruse(benchmark::State& state) {
  Plsc b = from_pls(fixtures::cruse());
  for (auto _ : state) benchmark::DoNotOptimize(secondary_extend(b));
}
BENCHMARK(BM_SecondaryCruse)->Unit(benchmark::kMillisecond);

void BM_BugCheckGw6(benchmark::State& state) {
  Plsc b = from_pls(fixtures::gw6());
  for (auto _ : state) benchmark::DoNotOptimize(bug_condition(b));
}
BENCHMARK(BM_BugCheckGw6);

void BM_CountCompletionsEmpty(benchmark::State& state) {
  Plsc b = new_empty(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_completions(b));
}
BENCHMARK(BM_CountCompletionsEmpty)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MaxRbcRooks(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_rbc_rooks(6, 4, 4, 4));
}
BENCHMARK(BM_MaxRbcRooks)->Unit(benchmark::kMillisecond);

void BM_EmbedCompactGw6Hull(benchmark::State& state) {
  Plsc g = from_pls(fixtures::gw6());
  CompactBrick t = CompactBrick::extract(g, *closure_hull(g, true));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(embed_compact(t, n));
}
BENCHMARK(BM_EmbedCompactGw6Hull)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();

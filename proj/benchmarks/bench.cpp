#include <benchmark/benchmark.h>

#include "hfzf/datatypes.hpp"
#include "hfzf/fixedpoint.hpp"
#include "hfzf/grammar.hpp"
#include "hfzf/proplogic.hpp"
#include "hfzf/recursion.hpp"
#include "hfzf/relations.hpp"
#include "hfzf/testing.hpp"

using namespace hfzf;

static void BM_InternRandomSets(benchmark::State& state) {
  for (auto _ : state) {
    Ctx ctx;
    testing::Rng rng(1);
    for (int i = 0; i < 200; ++i)
      benchmark::DoNotOptimize(testing::random_hset(ctx, rng, 4, 3));
  }
}
BENCHMARK(BM_InternRandomSets);

static void BM_RtranclChain(benchmark::State& state) {
  Ctx ctx;
  std::vector<HSet> edges;
  for (std::uint32_t i = 0; i + 1 < 8; ++i)
    edges.push_back(pair(ctx.ordinal(i), ctx.ordinal(i + 1)));
  HSet r = ctx.make(edges);
  for (auto _ : state) benchmark::DoNotOptimize(rtrancl(r));
}
BENCHMARK(BM_RtranclChain);

static void BM_RankDeepList(benchmark::State& state) {
  Ctx ctx;
  std::vector<HSet> atoms(12, ctx.ordinal(1));
  HSet l = list_of(ctx, atoms);
  for (auto _ : state) {
    Ctx fresh;
    HSet copy = parse_set(fresh, print_set(l));
    benchmark::DoNotOptimize(rank(copy));
  }
}
BENCHMARK(BM_RankDeepList);

static void BM_ListRecLength(benchmark::State& state) {
  Ctx ctx;
  std::vector<HSet> atoms(12, ctx.ordinal(1));
  HSet l = list_of(ctx, atoms);
  for (auto _ : state)
    benchmark::DoNotOptimize(list_rec(
        ctx.ordinal(0), [](HSet, HSet, HSet r) { return succ(r); }, l));
}
BENCHMARK(BM_ListRecLength);

static void BM_ProveTwoVarTautology(benchmark::State& state) {
  Prop goal = parse_prop("((#0 => #1) => #0) => #0");
  for (auto _ : state) benchmark::DoNotOptimize(prove_complete({}, goal));
}
BENCHMARK(BM_ProveTwoVarTautology);

static void BM_FinEnum(benchmark::State& state) {
  for (auto _ : state) {
    Ctx ctx;
    benchmark::DoNotOptimize(fin_enum(ctx.ordinal(6)));
  }
}
BENCHMARK(BM_FinEnum);

BENCHMARK_MAIN();

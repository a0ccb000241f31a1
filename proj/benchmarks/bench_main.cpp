#include "sdesign/algebra.hpp"
#include "sdesign/construct.hpp"
#include "sdesign/verify.hpp"

#include <benchmark/benchmark.h>

using namespace sdesign;

namespace {

FamilySolution first_solution(int d) { return solve_three_value_family(d).front(); }

void BM_ExpandSymmetricOrbit(benchmark::State& state) {
  auto d = static_cast<int>(state.range(0));
  auto x = build_design(first_solution(d));
  for (auto _ : state) benchmark::DoNotOptimize(x.expand());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.expand().size()));
}
BENCHMARK(BM_ExpandSymmetricOrbit)->DenseRange(3, 7);

void BM_BruteForceVerify(benchmark::State& state) {
  auto d = static_cast<int>(state.range(0));
  auto x = build_design(first_solution(d));
  for (auto _ : state) benchmark::DoNotOptimize(verify_brute_force(x, 3));
}
BENCHMARK(BM_BruteForceVerify)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_BruteForceCanonicalOnly(benchmark::State& state) {
  auto d = static_cast<int>(state.range(0));
  auto x = build_design(first_solution(d));
  BruteForceOptions opts;
  opts.canonical_only = true;
  for (auto _ : state) benchmark::DoNotOptimize(verify_brute_force(x, 3, opts));
}
BENCHMARK(BM_BruteForceCanonicalOnly)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_PowerSumCriterion(benchmark::State& state) {
  auto d = static_cast<int>(state.range(0));
  std::vector<PointVector> base{first_solution(d).base_point};
  for (auto _ : state) benchmark::DoNotOptimize(verify_power_sum_criterion(base, 3));
}
BENCHMARK(BM_PowerSumCriterion)->Arg(10)->Arg(100);

void BM_InSpan(benchmark::State& state) {
  auto d = static_cast<std::size_t>(state.range(0));
  auto s = PermGroup::symmetric(d);
  auto basis = power_basis(s, 3);
  std::vector<int> e(d, 0);
  e[0] = 2;
  e[1] = 1;
  auto cand = symmetrized_monomial(s, MultiIndex(e));
  for (auto _ : state) benchmark::DoNotOptimize(in_span(cand, basis));
}
BENCHMARK(BM_InSpan)->DenseRange(3, 5);

void BM_DecompositionTable(benchmark::State& state) {
  auto s = PermGroup::symmetric(4);
  for (auto _ : state) benchmark::DoNotOptimize(decomposition_table(4, 4, s, DecompositionBasis::schur));
}
BENCHMARK(BM_DecompositionTable);

void BM_SolveThreeValueFamily(benchmark::State& state) {
  auto d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_three_value_family(d));
}
BENCHMARK(BM_SolveThreeValueFamily)->Arg(3)->Arg(9)->Arg(100);

}  // namespace

BENCHMARK_MAIN();

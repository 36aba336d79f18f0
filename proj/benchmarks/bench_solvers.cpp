#include <benchmark/benchmark.h>

#include "recamp/gadgets.hpp"
#include "recamp/matching.hpp"
#include "recamp/solvers.hpp"

using namespace recamp;

namespace {

RandomInstanceParams params(std::size_t k, std::size_t n, VotingRuleSpec rule, WinnerBound bound,
                            bool priced) {
  RandomInstanceParams p;
  p.districts = k;
  p.additional = n;
  p.rule = std::move(rule);
  p.bound = bound;
  p.priced = priced;
  return p;
}

void BM_SingleWinnerMatching(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = random_instance(params(n, n, rules::Borda{}, WinnerBound::at_most(1), true), 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_crc1(inst));
}
BENCHMARK(BM_SingleWinnerMatching)->RangeMultiplier(2)->Range(4, 64);

void BM_TrivialScoring(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst =
      random_instance(params(n / 2 + 1, n, rules::TrivialScoring{}, WinnerBound::at_most(3), true), 11);
  for (auto _ : state) benchmark::DoNotOptimize(solve_trivial_scoring(inst));
}
BENCHMARK(BM_TrivialScoring)->RangeMultiplier(2)->Range(4, 128);

void BM_CoverSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = random_instance(params(3, n, rules::TApproval{1}, WinnerBound::at_most(3), false), 13);
  for (auto _ : state) benchmark::DoNotOptimize(solve_fpt(inst));
}
BENCHMARK(BM_CoverSearch)->DenseRange(3, 9, 2);

void BM_BruteForce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = random_instance(params(3, n, rules::Borda{}, WinnerBound::unbounded(), false), 17);
  for (auto _ : state) benchmark::DoNotOptimize(solve_brute(inst));
}
BENCHMARK(BM_BruteForce)->DenseRange(3, 9, 2);

void BM_AllIfThree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = random_instance(params(n, n, rules::AllIfThree{}, WinnerBound::at_most(3), false), 19);
  for (auto _ : state) benchmark::DoNotOptimize(solve_all_if_three_bounded(inst));
}
BENCHMARK(BM_AllIfThree)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();

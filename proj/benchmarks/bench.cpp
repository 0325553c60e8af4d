#include <benchmark/benchmark.h>

#include "sbraid/builtin_scripts.hpp"
#include "sbraid/nilpotent.hpp"
#include "sbraid/split.hpp"
#include "support.hpp"

namespace {

using namespace sbraid;

void BM_FreeReduce(benchmark::State& state) {
  testing::Rng rng(7);
  auto alpha = testing::free_alphabet(2);
  std::vector<RawWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(testing::random_letters(rng, alpha, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(free_reduce(words[i++ % words.size()]));
}
BENCHMARK(BM_FreeReduce)->Arg(64)->Arg(1024);

void BM_Smith(benchmark::State& state) {
  testing::Rng rng(8);
  auto dim = static_cast<std::size_t>(state.range(0));
  IntMatrix m = testing::random_matrix(rng, dim, dim, 50);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_Smith)->Arg(10)->Arg(20)->Arg(40);

void BM_InvariantFactors(benchmark::State& state) {
  testing::Rng rng(9);
  auto dim = static_cast<std::size_t>(state.range(0));
  IntMatrix m = testing::random_matrix(rng, dim, dim, 50);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(m));
}
BENCHMARK(BM_InvariantFactors)->Arg(20)->Arg(40);

void BM_Collect(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  HallBasis basis(6, c);
  Collector col(basis);
  testing::Rng rng(10);
  auto alpha = testing::free_alphabet(6);
  Word w = testing::random_word(rng, alpha, 200);
  for (auto _ : state) benchmark::DoNotOptimize(col.collect(w, alpha));
}
BENCHMARK(BM_Collect)->Arg(2)->Arg(3);

void BM_ClassTwoQuotient(benchmark::State& state) {
  auto p = build_presentation(Preset::PureClosedAbt, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(NilpotentQuotient(p, 2).quotients());
}
BENCHMARK(BM_ClassTwoQuotient)->Args({3, 1})->Args({4, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

void BM_BuiltinSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(builtin_suite(Suite::Lemma41_1, 5, 3));
}
BENCHMARK(BM_BuiltinSuite)->Unit(benchmark::kMillisecond);

void BM_AlmostDirect(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(almost_direct_check(5, 3));
}
BENCHMARK(BM_AlmostDirect)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

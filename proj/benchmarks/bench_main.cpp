#include <benchmark/benchmark.h>

#include <random>

#include "hbn/bundle.hpp"
#include "hbn/components.hpp"
#include "hbn/experiments.hpp"
#include "oracles.hpp"

namespace {

using hbn::SplittingType;

hbn::LaurentMatrix scrambled(const hbn::PrimeField& f, const SplittingType& e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto l = oracle::random_unimodular(f, e.size(), -1, 3, rng);
  const auto r = oracle::random_unimodular(f, e.size(), +1, 3, rng);
  return hbn::LaurentMatrix(f, hbn::multiply(f, hbn::multiply(f, l, hbn::diag_transition(f, e).grid()), r));
}

SplittingType type_of_rank(int k) {
  std::vector<int> values;
  for (int i = 0; i < k; ++i) values.push_back(i % 2 ? i : -i);
  return SplittingType::make(values);
}

void BM_BirkhoffFactorize(benchmark::State& state) {
  const hbn::PrimeField f(32003);
  const auto m = scrambled(f, type_of_rank(static_cast<int>(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hbn::birkhoff_factorize(m));
}
BENCHMARK(BM_BirkhoffFactorize)->DenseRange(2, 8, 2);

void BM_H0Twist(benchmark::State& state) {
  const hbn::PrimeField f(32003);
  const auto e = type_of_rank(static_cast<int>(state.range(0)));
  const auto m = scrambled(f, e, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hbn::h0_twist(m, 0));
}
BENCHMARK(BM_H0Twist)->DenseRange(2, 8, 2);

void BM_Classify(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int d = 0; d <= 2 * g; ++d)
      for (int r = 0; r <= 4; ++r) benchmark::DoNotOptimize(hbn::classify_components(g, 5, d, r));
}
BENCHMARK(BM_Classify)->Arg(6)->Arg(12)->Arg(20);

void BM_DownwardClosure(benchmark::State& state) {
  const auto e = hbn::balanced_type(4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(hbn::downward_closure(e, state.range(0)));
}
BENCHMARK(BM_DownwardClosure)->Arg(4)->Arg(8)->Arg(12);

void BM_BundleClaimTrials(benchmark::State& state) {
  hbn::ExperimentOptions opt;
  opt.trials = 50;
  opt.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(hbn::experiment_prop5(hbn::BBType{0, 2, 1, 1, 1, 1}, opt));
}
BENCHMARK(BM_BundleClaimTrials);

}  // namespace

BENCHMARK_MAIN();

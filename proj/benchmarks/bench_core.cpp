#include <benchmark/benchmark.h>

#include <random>

#include "trophodge/chow.hpp"
#include "trophodge/clemens_schmid.hpp"
#include "trophodge/fixtures.hpp"
#include "trophodge/hodge_cycles.hpp"
#include "trophodge/matroid.hpp"
#include "trophodge/trop_cohomology.hpp"

using namespace trophodge;

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> u(-5, 5);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Rational(u(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(32)->Arg(48)->Arg(64);

static void BM_ChowRing(benchmark::State& state) {
  Fan f = bergman_fan(Matroid::uniform(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) {
    ChowRing r(f);
    benchmark::DoNotOptimize(r.dim(1));
  }
}
BENCHMARK(BM_ChowRing)->DenseRange(4, 6);

static void BM_HodgeNumbers(benchmark::State& state) {
  FaceComplex x = compactify(fixtures::square());
  for (auto _ : state) {
    TropicalComplex t(x);
    for (std::size_t p = 0; p <= 2; ++p) benchmark::DoNotOptimize(t.hodge_numbers(p));
  }
}
BENCHMARK(BM_HodgeNumbers);

static void BM_SteenbrinkPage(benchmark::State& state) {
  FaceComplex x = compactify(fixtures::square());
  for (auto _ : state) {
    SteenbrinkPage st(x);
    benchmark::DoNotOptimize(st.row_cohomology(2));
  }
}
BENCHMARK(BM_SteenbrinkPage);

static void BM_HodgeCycles(benchmark::State& state) {
  FaceComplex x = compactify(fixtures::square());
  SteenbrinkPage st(x);
  for (auto _ : state)
    for (auto& a : hodge_locus_basis(st, 1)) benchmark::DoNotOptimize(hodge_to_cycle(st, a));
}
BENCHMARK(BM_HodgeCycles);

static void BM_RandomClemensSchmid(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto r = clemens_schmid_sequences(random_triple(seed, 6), seed);
    benchmark::DoNotOptimize(r.ok());
    ++seed;
  }
}
BENCHMARK(BM_RandomClemensSchmid);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "psbent/boolfun.hpp"
#include "psbent/construct.hpp"
#include "psbent/field.hpp"
#include "psbent/quasifield.hpp"

using namespace psbent;

static void BM_FieldMul(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = rng() & f.mask();
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem x : xs) acc = f.mul(acc ^ x, x | 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(11)->Arg(16);

static void BM_SchoolbookMul(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = rng() & f.mask();
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem x : xs) acc = clmul_mod(acc ^ x, x | 1, f.modulus(), f.degree());
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_SchoolbookMul)->Arg(8)->Arg(11)->Arg(16);

static void BM_WalshSpectrum(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(2);
  const auto f = TruthTable::from_function(n, [&](std::size_t) { return rng() & 1; });
  for (auto _ : state) benchmark::DoNotOptimize(walsh_spectrum(f));
  state.SetItemsProcessed(state.iterations() * f.size());
}
BENCHMARK(BM_WalshSpectrum)->Arg(10)->Arg(14)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

static void BM_Anf(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(3);
  const auto f = TruthTable::from_function(n, [&](std::size_t) { return rng() & 1; });
  for (auto _ : state) benchmark::DoNotOptimize(anf(f));
}
BENCHMARK(BM_Anf)->Arg(14)->Arg(22)->Unit(benchmark::kMillisecond);

static void BM_PsMinus(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const auto family = static_cast<Family>(state.range(1));
  const Field f(m);
  QuasifieldParams params;
  params.k = 3;
  params.beta = 1;
  const Quasifield q = Quasifield::make(family, f, params, Validation::Skip);
  const Selector g = Selector::random(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ps_minus(q, g, false));
  state.SetLabel(q.description());
}
BENCHMARK(BM_PsMinus)
    ->Args({7, static_cast<int>(Family::Field)})
    ->Args({7, static_cast<int>(Family::DempwolffMuller)})
    ->Args({7, static_cast<int>(Family::Knuth)})
    ->Args({7, static_cast<int>(Family::Kantor)})
    ->Args({11, static_cast<int>(Family::Kantor)})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "lagc/lagc.hpp"

using namespace lagc;

namespace {

std::vector<Lagrangian> corpus(const Signature& sig, int order, int count) {
  return random_corpus(CorpusConfig{sig, order, 2, 3, 2}, 99, count);
}

void BM_Multiply(benchmark::State& state) {
  const Signature sig(2, 2, 1, 1);
  CorpusRng rng(1);
  const Expression a = random_expression(sig, rng, static_cast<int>(state.range(0)), 2, true);
  const Expression b = random_expression(sig, rng, static_cast<int>(state.range(0)), 2, true);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(16);

void BM_VarDeriv(benchmark::State& state) {
  const auto ls = corpus(Signature(2, 1, 1, 1), static_cast<int>(state.range(0)), 16);
  for (auto _ : state) {
    for (const auto& l : ls) benchmark::DoNotOptimize(var_deriv_all(l));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ls.size()));
}
BENCHMARK(BM_VarDeriv)->Arg(1)->Arg(2);

void BM_ApplyD(benchmark::State& state) {
  const auto ls = corpus(Signature(2, 1, 1, 1), 1, 16);
  for (auto _ : state) {
    for (const auto& l : ls) benchmark::DoNotOptimize(apply_d(l));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ls.size()));
}
BENCHMARK(BM_ApplyD);

void BM_DSquaredSecondOrder(benchmark::State& state) {
  const auto ls = corpus(Signature(1, 1, 1, 1), 2, 4);
  for (auto _ : state) {
    for (const auto& l : ls) benchmark::DoNotOptimize(d_squared_check(l));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ls.size()));
}
BENCHMARK(BM_DSquaredSecondOrder);

}  // namespace

BENCHMARK_MAIN();

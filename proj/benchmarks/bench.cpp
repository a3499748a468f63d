#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "hrp/digitset.hpp"
#include "hrp/expander.hpp"
#include "hrp/places.hpp"
#include "hrp/verify.hpp"

using namespace hrp;

namespace {

const std::vector<MinPoly>& fields() {
  static const std::vector<MinPoly> f = {MinPoly(IntPoly{-2, 1}), MinPoly(IntPoly{2, -2, 1}),
                                         MinPoly(IntPoly{5, -6, 5}), MinPoly(IntPoly{-2, -2, 0, 1})};
  return f;
}

struct Prepared {
  std::shared_ptr<const Embedder> emb;
  Expander ex;
};

Prepared prepare(std::size_t which) {
  const AlgebraicNumber a = analyze(fields()[which]);
  auto emb = std::make_shared<const Embedder>(a, kDefaultTableDegree);
  return {emb, Expander(build_digit_set(*emb), emb)};
}

std::vector<IntPoly> random_betas(int count) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-10, 10);
  std::vector<IntPoly> out;
  for (int i = 0; i < count; ++i) out.push_back(IntPoly{coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)});
  return out;
}

void BM_Analyze(benchmark::State& state) {
  const MinPoly& m = fields()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(classify(analyze(m)));
}
BENCHMARK(BM_Analyze)->DenseRange(0, 3);

void BM_Embed(benchmark::State& state) {
  const Prepared p = prepare(static_cast<std::size_t>(state.range(0)));
  const std::vector<IntPoly> betas = random_betas(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(p.ex.abs_values(betas[i++ % betas.size()]));
}
BENCHMARK(BM_Embed)->DenseRange(0, 3);

void BM_BuildDigitSet(benchmark::State& state) {
  const AlgebraicNumber a = analyze(fields()[static_cast<std::size_t>(state.range(0))]);
  const Embedder emb(a, kDefaultTableDegree);
  for (auto _ : state) benchmark::DoNotOptimize(build_digit_set(emb, kDefaultSearchBudget, 1));
}
BENCHMARK(BM_BuildDigitSet)->DenseRange(0, 3);

void BM_Step(benchmark::State& state) {
  const Prepared p = prepare(static_cast<std::size_t>(state.range(0)));
  const std::vector<IntPoly> betas = random_betas(64);
  std::size_t i = 0;
  for (auto _ : state) {
    const IntPoly& b = betas[i++ % betas.size()];
    if (b.is_zero()) continue;
    benchmark::DoNotOptimize(p.ex.step(b));
  }
}
BENCHMARK(BM_Step)->DenseRange(0, 3);

void BM_Expand(benchmark::State& state) {
  const Prepared p = prepare(static_cast<std::size_t>(state.range(0)));
  const std::vector<IntPoly> betas = random_betas(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(p.ex.expand(betas[i++ % betas.size()], kDefaultMaxSteps, false));
}
BENCHMARK(BM_Expand)->DenseRange(0, 3);

void BM_Attractor(benchmark::State& state) {
  const Prepared p = prepare(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(attractor(p.ex, SeedBox::symmetric(5), kDefaultMaxSteps, 1));
}
BENCHMARK(BM_Attractor)->DenseRange(0, 3);

void BM_EnumerateWords(benchmark::State& state) {
  const std::vector<IntPoly> F = {IntPoly{0}, IntPoly{1}, IntPoly{-1}};
  const MinPoly m(IntPoly{-2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_words(F, m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateWords)->Arg(8)->Arg(11);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "rca/rough_concepts.hpp"
#include "rca/rules.hpp"

namespace {

rca::FormalContext random_context(std::size_t objects, std::size_t attributes, double density,
                                  unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<std::string> g, m;
  for (std::size_t i = 0; i < objects; ++i) g.push_back("g" + std::to_string(i));
  for (std::size_t i = 0; i < attributes; ++i) m.push_back("m" + std::to_string(i));
  std::vector<rca::AttributeSet> rows(objects, rca::AttributeSet(attributes));
  for (auto& row : rows)
    for (std::size_t j = 0; j < attributes; ++j)
      if (coin(rng)) row.insert(j);
  return rca::FormalContext(g, m, std::move(rows));
}

// Blocks of `width` consecutive objects.
rca::ApproximationSpace striped(const rca::FormalContext& ctx, std::size_t width) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    if (g % width == 0) blocks.emplace_back();
    blocks.back().push_back(g);
  }
  return rca::ApproximationSpace(ctx.objects(), blocks);
}

void BM_EnumerateConcepts(benchmark::State& state) {
  const auto ctx = random_context(state.range(0), state.range(1), 0.3, 1);
  std::size_t n = 0;
  for (auto _ : state) {
    auto lat = rca::enumerate_concepts(ctx);
    n = lat.size();
    benchmark::DoNotOptimize(n);
  }
  state.counters["concepts"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateConcepts)->Args({20, 10})->Args({50, 15})->Args({100, 20});

void BM_ApproximationMaps(benchmark::State& state) {
  const auto ctx = random_context(state.range(0), state.range(1), 0.3, 2);
  const auto space = striped(ctx, 3);
  for (auto _ : state) {
    rca::ConceptApproximationMaps maps(space, ctx);
    benchmark::DoNotOptimize(maps.upper_assignment().data());
  }
}
BENCHMARK(BM_ApproximationMaps)->Args({20, 10})->Args({50, 15});

void BM_RoughClasses(benchmark::State& state) {
  const auto ctx = random_context(state.range(0), state.range(1), 0.3, 3);
  const rca::ConceptApproximationMaps maps(striped(ctx, 3), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(rca::rough_concept_classes(maps).size());
}
BENCHMARK(BM_RoughClasses)->Args({50, 15});

void BM_RoughMeasure(benchmark::State& state) {
  const auto ctx = random_context(1000, 40, 0.4, 4);
  const rca::Implication imp{rca::AttributeSet(40, {0, 1}), rca::AttributeSet(40, {2})};
  for (auto _ : state) benchmark::DoNotOptimize(rca::rough_measure(ctx, imp).numerator());
}
BENCHMARK(BM_RoughMeasure);

}  // namespace

BENCHMARK_MAIN();

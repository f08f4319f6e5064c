#pragma once

// Seeded random contexts and partitions for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rca/approximation_space.hpp"
#include "rca/context.hpp"
#include "oracle.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::vector<std::string> names(char prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline rca::FormalContext context(Rng& rng, std::size_t objects, std::size_t attributes,
                                  double density = 0.5) {
  std::bernoulli_distribution coin(density);
  std::vector<rca::AttributeSet> rows(objects, rca::AttributeSet(attributes));
  for (auto& row : rows)
    for (std::size_t m = 0; m < attributes; ++m)
      if (coin(rng)) row.insert(m);
  return rca::FormalContext(names('g', objects), names('m', attributes), std::move(rows));
}

/// |G| in [1, max_g], |M| in [1, max_m], density drawn per context.
inline rca::FormalContext small_context(Rng& rng, std::size_t max_g = 6, std::size_t max_m = 6) {
  const double density = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  return context(rng, uniform(rng, 1, max_g), uniform(rng, 1, max_m), density);
}

/// Random labels; returns the space and the labels the oracle uses.
inline std::pair<rca::ApproximationSpace, oracle::Blocks> partition(Rng& rng,
                                                                   const rca::FormalContext& ctx) {
  const auto n = ctx.object_count();
  const auto k = n == 0 ? 0 : uniform(rng, 1, n);
  oracle::Blocks labels;
  std::vector<std::vector<std::size_t>> blocks(k);
  for (std::size_t g = 0; g < n; ++g) {
    auto b = uniform(rng, 0, k - 1);
    labels.label.push_back(static_cast<int>(b));
    blocks[b].push_back(g);
  }
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return {rca::ApproximationSpace(ctx.objects(), blocks), labels};
}

/// Context whose every column is a union of blocks of `space`.
inline rca::FormalContext definable_context(Rng& rng, const rca::ApproximationSpace& space,
                                            std::size_t attributes) {
  std::bernoulli_distribution coin(0.5);
  std::vector<rca::AttributeSet> rows(space.object_count(), rca::AttributeSet(attributes));
  for (std::size_t m = 0; m < attributes; ++m)
    for (const auto& block : space.blocks())
      if (coin(rng)) block.for_each([&](std::size_t g) { rows[g].insert(m); });
  return rca::FormalContext(space.objects(), names('m', attributes), std::move(rows));
}

inline rca::ObjectSet object_subset(Rng& rng, std::size_t universe) {
  rca::ObjectSet s(universe);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < universe; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

inline rca::AttributeSet attribute_subset(Rng& rng, std::size_t universe, double p = 0.5) {
  rca::AttributeSet s(universe);
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < universe; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

inline oracle::Set to_oracle(const auto& index_set) {
  oracle::Set s;
  for (auto i : index_set.indices()) s.insert(static_cast<int>(i));
  return s;
}

}  // namespace gen

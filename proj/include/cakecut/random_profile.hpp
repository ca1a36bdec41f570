#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cakecut/valuation.hpp"

namespace cakecut {

/// Deterministic integer draws; the bounded draw is spelled out here so
/// results do not depend on the standard library's distribution code.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of trial `trial` in a campaign started from `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

constexpr std::uint64_t kGrid = 65536;  // breakpoints are multiples of 1/kGrid, weights lie in [1, kGrid]

/// Integer skeleton of one valuation: interior breakpoints as multiples of
/// 1/kGrid and one positive weight per segment. Densities are the weights
/// rescaled to total value 1.
struct DensitySketch {
  std::vector<std::uint64_t> cuts;     // strictly ascending, in [1, kGrid-1]
  std::vector<std::uint64_t> weights;  // cuts.size() + 1 entries, each >= 1

  ValuationFunction build() const;
};

DensitySketch random_sketch(Rng& rng, int segments);
std::vector<ValuationFunction> build_profile(const std::vector<DensitySketch>& sketches);

/// n independent valuations with `segments` pieces each.
std::vector<ValuationFunction> random_profile(int n, int segments, std::uint64_t seed);

}  // namespace cakecut

#include "cakecut/random_profile.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cakecut {

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return engine_();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);  // reject the biased tail
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % range;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(splitmix64(seed) ^ trial); }

ValuationFunction DensitySketch::build() const {
  std::vector<Rational> breaks{Rational(0)};
  for (auto c : cuts) breaks.emplace_back(static_cast<std::int64_t>(c), static_cast<std::int64_t>(kGrid));
  breaks.emplace_back(1);
  // total = sum w_k * width_k, scaled by kGrid to stay integral
  std::int64_t total = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const std::uint64_t lo = k == 0 ? 0 : cuts[k - 1];
    const std::uint64_t hi = k == cuts.size() ? kGrid : cuts[k];
    total += static_cast<std::int64_t>(weights[k] * (hi - lo));
  }
  std::vector<Rational> densities;
  for (auto w : weights) {
    densities.emplace_back(static_cast<std::int64_t>(w) * static_cast<std::int64_t>(kGrid), total);
  }
  return ValuationFunction::make(std::move(breaks), std::move(densities));
}

DensitySketch random_sketch(Rng& rng, int segments) {
  if (segments < 1) throw std::invalid_argument("need at least one segment");
  if (static_cast<std::uint64_t>(segments) > kGrid) throw std::invalid_argument("too many segments");
  DensitySketch s;
  std::set<std::uint64_t> cuts;
  while (cuts.size() + 1 < static_cast<std::size_t>(segments)) cuts.insert(rng.between(1, kGrid - 1));
  s.cuts.assign(cuts.begin(), cuts.end());
  for (int k = 0; k < segments; ++k) s.weights.push_back(rng.between(1, kGrid));
  return s;
}

std::vector<ValuationFunction> build_profile(const std::vector<DensitySketch>& sketches) {
  std::vector<ValuationFunction> out;
  out.reserve(sketches.size());
  for (const auto& s : sketches) out.push_back(s.build());
  return out;
}

std::vector<ValuationFunction> random_profile(int n, int segments, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one player");
  Rng rng(seed);
  std::vector<ValuationFunction> profile;
  for (int i = 0; i < n; ++i) profile.push_back(random_sketch(rng, segments).build());
  return profile;
}

}  // namespace cakecut

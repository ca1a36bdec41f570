#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "cakecut/division.hpp"
#include "cakecut/engine.hpp"

namespace cakecut {

struct Witness {
  std::uint64_t trial = 0;
  std::vector<ValuationFunction> profile;
  std::size_t efr_count = 0;
  std::string reason;
};

struct VerificationReport {
  ProtocolId protocol = ProtocolId::EnhancedGeneral;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t formula = 0;
  std::size_t min_efr_observed = 0;
  std::size_t max_efr_observed = 0;
  std::size_t proportionality_failures = 0;
  std::size_t lower_bound_failures = 0;
  std::size_t players_without_efr = 0;  // players with no envy-free relation at all
  std::size_t step_bound_failures = 0;
  std::size_t max_step_count = 0;
  std::vector<Witness> violations;  // capped at VerifyOptions::max_witnesses

  bool ok() const {
    return proportionality_failures == 0 && lower_bound_failures == 0 && players_without_efr == 0 &&
           step_bound_failures == 0;
  }
};

struct VerifyOptions {
  unsigned workers = 0;  // 0: hardware concurrency
  int max_segments = 8;
  std::size_t max_witnesses = 5;
};

/// Profile used by trial `trial` of a campaign with `seed`: segment count
/// and densities both derive from the trial seed.
std::vector<ValuationFunction> trial_profile(int n, std::uint64_t seed, std::uint64_t trial, int max_segments = 8);

/// Runs `trials` independent trials (fan-out over workers, results merged in
/// trial order so the report does not depend on scheduling).
template <typename Outcome>
std::vector<Outcome> run_trials(std::uint64_t trials, unsigned workers,
                                const std::function<Outcome(std::uint64_t)>& body) {
  std::vector<Outcome> out(trials);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(trials, 1)));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  const auto work = [&] {
    for (std::uint64_t t = next++; t < trials && !failed; t = next++) {
      try {
        out[t] = body(t);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

VerificationReport verify_dgef_lower_bound(ProtocolId id, int n, std::uint64_t trials, std::uint64_t seed,
                                           const VerifyOptions& options = {});

struct SearchResult {
  ProtocolId protocol = ProtocolId::EnhancedGeneral;
  int n = 0;
  std::int64_t formula = 0;
  std::size_t min_found = 0;
  std::size_t evaluations = 0;
  std::vector<ValuationFunction> witness;
};

/// Heuristic minimization of the envy-free relation count: random restarts
/// plus single-coordinate perturbations of the density sketches.
SearchResult search_min_efr(ProtocolId id, int n, std::uint64_t budget, std::uint64_t seed);

}  // namespace cakecut

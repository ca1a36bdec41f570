#include "cakecut/verify.hpp"

#include <algorithm>

#include "cakecut/dgef.hpp"
#include "cakecut/random_profile.hpp"

namespace cakecut {

std::vector<ValuationFunction> trial_profile(int n, std::uint64_t seed, std::uint64_t trial, int max_segments) {
  const std::uint64_t s = trial_seed(seed, trial);
  Rng rng(s);
  const int segments = static_cast<int>(rng.between(1, static_cast<std::uint64_t>(max_segments)));
  std::vector<DensitySketch> sketches;
  for (int i = 0; i < n; ++i) sketches.push_back(random_sketch(rng, segments));
  return build_profile(sketches);
}

namespace {

struct TrialOutcome {
  std::size_t efr = 0;
  bool proportional = true;
  bool below_formula = false;
  std::size_t without_efr = 0;
  bool over_step_bound = false;
  std::size_t steps = 0;
};

}  // namespace

VerificationReport verify_dgef_lower_bound(ProtocolId id, int n, std::uint64_t trials, std::uint64_t seed,
                                           const VerifyOptions& options) {
  VerificationReport report;
  report.protocol = id;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  report.formula = dgef_formula(id, n);
  const auto bound = declared_step_bound(id, n);
  const RunOptions run_options{false, false};

  const auto outcomes = run_trials<TrialOutcome>(trials, options.workers, [&](std::uint64_t t) {
    const auto profile = trial_profile(n, seed, t, options.max_segments);
    const auto result = run_protocol(id, profile, run_options);
    const auto fair = fairness_report(result.division, profile);
    TrialOutcome o;
    o.efr = fair.efr_count;
    o.proportional = fair.proportional;
    o.below_formula = static_cast<std::int64_t>(fair.efr_count) < report.formula;
    o.without_efr = fair.players_without_efr.size();
    o.steps = result.step_count;
    o.over_step_bound = bound && result.step_count > *bound;
    return o;
  });

  bool first = true;
  for (std::uint64_t t = 0; t < outcomes.size(); ++t) {
    const auto& o = outcomes[t];
    report.min_efr_observed = first ? o.efr : std::min(report.min_efr_observed, o.efr);
    report.max_efr_observed = std::max(report.max_efr_observed, o.efr);
    first = false;
    report.max_step_count = std::max(report.max_step_count, o.steps);
    std::string reason;
    if (!o.proportional) {
      ++report.proportionality_failures;
      reason += "not proportional; ";
    }
    if (o.below_formula) {
      ++report.lower_bound_failures;
      reason += "efr below formula; ";
    }
    if (o.without_efr > 0) {
      report.players_without_efr += o.without_efr;
      reason += "player without envy-free relation; ";
    }
    if (o.over_step_bound) {
      ++report.step_bound_failures;
      reason += "step count over bound; ";
    }
    if (!reason.empty() && report.violations.size() < options.max_witnesses) {
      report.violations.push_back({t, trial_profile(n, seed, t, options.max_segments), o.efr, reason});
    }
  }
  return report;
}

SearchResult search_min_efr(ProtocolId id, int n, std::uint64_t budget, std::uint64_t seed) {
  SearchResult out;
  out.protocol = id;
  out.n = n;
  out.formula = dgef_formula(id, n);
  Rng rng(seed);
  const RunOptions run_options{false, false};
  const auto score = [&](const std::vector<DensitySketch>& sk) {
    const auto profile = build_profile(sk);
    const auto result = run_protocol(id, profile, run_options);
    ++out.evaluations;
    return fairness_report(result.division, profile).efr_count;
  };
  const auto fresh = [&] {
    const int segments = static_cast<int>(rng.between(1, 8));
    std::vector<DensitySketch> sk;
    for (int i = 0; i < n; ++i) sk.push_back(random_sketch(rng, segments));
    return sk;
  };

  constexpr std::uint64_t kRestartEvery = 64;
  std::vector<DensitySketch> current;
  std::size_t current_score = 0;
  bool have_best = false;
  while (out.evaluations < budget) {
    if (current.empty() || out.evaluations % kRestartEvery == 0) {
      current = fresh();
      current_score = score(current);
    } else {
      auto candidate = current;
      auto& sk = candidate[rng.between(0, static_cast<std::uint64_t>(n - 1))];
      const auto k = rng.between(0, sk.weights.size() - 1);
      // multiply or divide one weight by up to 8, clamped to the grid
      const std::uint64_t f = rng.between(2, 8);
      sk.weights[k] = rng.between(0, 1) ? std::min(kGrid, sk.weights[k] * f) : std::max<std::uint64_t>(1, sk.weights[k] / f);
      const std::size_t s = score(candidate);
      if (s <= current_score) {
        current = std::move(candidate);
        current_score = s;
      }
    }
    if (!have_best || current_score < out.min_found) {
      out.min_found = current_score;
      out.witness = build_profile(current);
      have_best = true;
    }
  }
  return out;
}

}  // namespace cakecut

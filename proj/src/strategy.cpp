#include "cakecut/strategy.hpp"

#include <stdexcept>

#include "cakecut/errors.hpp"
#include "cakecut/random_profile.hpp"

namespace cakecut {

namespace {

bool strategy_protocol(ProtocolId id) {
  switch (id) {
    case ProtocolId::EnhancedFour:
    case ProtocolId::EnhancedGeneral:
    case ProtocolId::StrongFairFour:
    case ProtocolId::StrongFairGeneral:
    case ProtocolId::SelfridgeConway: return true;
    default: return false;
  }
}

struct CheatOutcome {
  std::size_t policy_slot = 0;
  bool aborted = false;
  int cheater = 0;
  std::string policy;
  Rational cheater_value;
  bool truthful_short = false;
  bool truthful_envy = false;
  std::size_t truthful_without_efr = 0;
};

}  // namespace

std::string_view to_string(CheatKind kind) {
  switch (kind) {
    case CheatKind::ShiftTowardInterior: return "interior";
    case CheatKind::ShiftTowardBoundary: return "boundary";
    case CheatKind::OverclaimEval: return "overclaim";
  }
  return "?";
}

std::vector<CheatKind> all_cheat_kinds() {
  return {CheatKind::ShiftTowardInterior, CheatKind::ShiftTowardBoundary, CheatKind::OverclaimEval};
}

std::vector<CheatKind> shift_cheat_kinds() { return {CheatKind::ShiftTowardInterior, CheatKind::ShiftTowardBoundary}; }

const PolicyStats* StrategyReport::stats(CheatKind kind) const {
  for (const auto& s : per_policy) {
    if (s.kind == kind) return &s;
  }
  return nullptr;
}

CheaterRun run_with_cheater(ProtocolId id, std::span<const ValuationFunction> profile, int cheater,
                            const CheaterPolicy& policy, RunOptions options) {
  if (cheater < 0 || cheater >= static_cast<int>(profile.size())) {
    throw std::invalid_argument("cheater index " + std::to_string(cheater) + " out of range");
  }
  std::vector<PlayerAgent> agents;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (static_cast<int>(i) == cheater) {
      agents.emplace_back(static_cast<int>(i), profile[i], policy);
    } else {
      agents.emplace_back(static_cast<int>(i), profile[i]);
    }
  }
  CheaterRun run;
  run.result = run_protocol(id, agents, options);
  run.fairness = fairness_report(run.result.division, profile);
  run.cheater = cheater;
  run.policy = policy;
  return run;
}

StrategyReport check_strategy_proofness(ProtocolId id, int n, std::uint64_t trials, std::span<const CheatKind> kinds,
                                        std::uint64_t seed, const VerifyOptions& options) {
  if (!strategy_protocol(id)) {
    throw std::invalid_argument(std::string(protocol_name(id)) + " is not covered by the strategy harness");
  }
  if (kinds.empty()) throw std::invalid_argument("no cheater policies given");
  StrategyReport report;
  report.protocol = id;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  for (auto k : kinds) report.per_policy.push_back({k});
  const Rational share(1, n);
  const bool envy_free_protocol = id == ProtocolId::SelfridgeConway;

  const auto outcomes = run_trials<CheatOutcome>(trials, options.workers, [&](std::uint64_t t) {
    const auto profile = trial_profile(n, seed, t, options.max_segments);
    Rng rng(splitmix64(trial_seed(seed, t) + 1));
    CheatOutcome o;
    o.cheater = static_cast<int>(rng.between(0, static_cast<std::uint64_t>(n - 1)));
    o.policy_slot = rng.between(0, kinds.size() - 1);
    const CheatKind kind = kinds[o.policy_slot];
    static const Rational deltas[] = {Rational(1, 10), Rational(1, 4), Rational(1, 2)};
    static const Rational factors[] = {Rational(3, 2), Rational(2), Rational(4)};
    const auto pick = rng.between(0, 2);
    const CheaterPolicy policy = kind == CheatKind::OverclaimEval ? CheaterPolicy::overclaim_eval(factors[pick])
                                                                  : CheaterPolicy{kind, deltas[pick], {}};
    o.policy = to_string(policy);
    try {
      const auto run = run_with_cheater(id, profile, o.cheater, policy, {false, false});
      o.cheater_value = run.fairness.own_values[o.cheater];
      for (auto p : run.fairness.players_without_efr) {
        if (static_cast<int>(p) != o.cheater) ++o.truthful_without_efr;
      }
      for (int i = 0; i < n; ++i) {
        if (i == o.cheater) continue;
        if (run.fairness.own_values[i] < share) o.truthful_short = true;
        for (int j = 0; envy_free_protocol && j < n; ++j) {
          if (j != o.cheater && run.fairness.envy(i, j)) o.truthful_envy = true;
        }
      }
    } catch (const ProtocolViolation&) {
      o.aborted = true;
    }
    return o;
  });

  for (std::uint64_t t = 0; t < outcomes.size(); ++t) {
    const auto& o = outcomes[t];
    auto& st = report.per_policy[o.policy_slot];
    ++st.runs;
    if (o.aborted) {
      ++st.aborted;
      continue;
    }
    ++report.completed;
    if (o.cheater_value < share) ++st.cheater_below_share;
    if (share < o.cheater_value) ++st.cheater_above_share;
    if (o.truthful_short) ++report.truthful_violations;
    if (o.truthful_envy) ++report.truthful_envy;
    report.truthful_without_efr += o.truthful_without_efr;
    if ((o.truthful_short || o.truthful_envy) && report.witnesses.size() < options.max_witnesses) {
      report.witnesses.push_back({t, trial_profile(n, seed, t, options.max_segments), 0,
                                  std::string(o.truthful_short ? "truthful player below share" : "truthful envy") +
                                       " with cheater p" + std::to_string(o.cheater + 1) + " (" + o.policy + ")"});
    }
  }
  return report;
}

}  // namespace cakecut

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cakecut/division.hpp"
#include "cakecut/engine.hpp"
#include "cakecut/verify.hpp"

namespace cakecut {

struct CheaterRun {
  ProtocolResult result;
  FairnessReport fairness;  // always against true valuations
  int cheater = 0;
  CheaterPolicy policy;
};

/// Runs `id` with player `cheater` applying `policy`; everyone else is truthful.
/// Structurally illegal answers surface as ProtocolViolation.
CheaterRun run_with_cheater(ProtocolId id, std::span<const ValuationFunction> profile, int cheater,
                            const CheaterPolicy& policy, RunOptions options = {});

struct PolicyStats {
  CheatKind kind = CheatKind::ShiftTowardInterior;
  std::size_t runs = 0;
  std::size_t aborted = 0;              // runs stopped by a protocol violation
  std::size_t cheater_below_share = 0;  // cheater's true value < 1/n
  std::size_t cheater_above_share = 0;  // cheater's true value > 1/n
};

struct StrategyReport {
  ProtocolId protocol = ProtocolId::EnhancedGeneral;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t completed = 0;
  std::size_t truthful_violations = 0;  // truthful player below 1/n
  std::size_t truthful_envy = 0;        // truthful player envying a truthful player (envy-free protocols only)
  std::size_t truthful_without_efr = 0; // truthful players envying everyone
  std::vector<PolicyStats> per_policy;
  std::vector<Witness> witnesses;

  bool ok() const { return truthful_violations == 0 && truthful_envy == 0 && truthful_without_efr == 0; }
  const PolicyStats* stats(CheatKind kind) const;
};

std::string_view to_string(CheatKind kind);

/// Randomized single-cheater campaign: each trial draws a profile, a cheater
/// and one of `kinds` with a random strength.
StrategyReport check_strategy_proofness(ProtocolId id, int n, std::uint64_t trials, std::span<const CheatKind> kinds,
                                        std::uint64_t seed, const VerifyOptions& options = {});

std::vector<CheatKind> all_cheat_kinds();
std::vector<CheatKind> shift_cheat_kinds();

}  // namespace cakecut

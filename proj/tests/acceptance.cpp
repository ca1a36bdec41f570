// One line per acceptance criterion; exit status 0 iff every line passes.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iterator>
#include <string>
#include <vector>

#include "cakecut/dgef.hpp"
#include "cakecut/random_profile.hpp"
#include "cakecut/strategy.hpp"
#include "cakecut/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cakecut;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Divisions inspected for players without any envy-free relation.
struct Coverage {
  std::size_t divisions = 0;
  std::size_t players_without_efr = 0;
};

Coverage coverage;
std::vector<std::int64_t> enhanced_max_steps(13, -1);  // by n, from criterion 3

bool report(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  const bool pass = out.pass && in_time;
  std::printf("criterion %2d: %s  %s  [%s; %.1fs", id, pass ? "PASS" : "FAIL", title, out.detail.c_str(), secs);
  if (limit_seconds > 0) std::printf(" of %.0fs", limit_seconds);
  std::printf("]\n");
  std::fflush(stdout);
  return pass;
}

Outcome table_exactness() {
  const auto cols = table_protocols();
  int mismatches = 0;
  for (const auto& row : oracle::kTable) {
    for (std::size_t c = 0; c < cols.size(); ++c) mismatches += dgef_formula(cols[c], row.n) != row.values[c];
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over n = 3..12"};
}

Outcome recurrence_closed_form() {
  int mismatches = 0;
  for (std::int64_t n = 1; n <= 65536; ++n) {
    const int l = oracle::floor_log2(n);
    mismatches += dc_recurrence(n) != n * l + 2 * n - (std::int64_t{2} << l);
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over n = 1..65536"};
}

Outcome enhanced_lower_bound() {
  std::size_t bad = 0;
  std::size_t min_gap = SIZE_MAX;
  for (int n = 3; n <= 12; ++n) {
    const auto r = verify_dgef_lower_bound(ProtocolId::EnhancedGeneral, n, 1000, 3000 + static_cast<std::uint64_t>(n));
    bad += r.proportionality_failures + r.lower_bound_failures;
    const std::int64_t guaranteed = n == 4 ? 10 : (n * n + 1) / 2 + 1;
    if (static_cast<std::int64_t>(r.min_efr_observed) < guaranteed || r.formula != guaranteed) ++bad;
    min_gap = std::min(min_gap, r.min_efr_observed - static_cast<std::size_t>(guaranteed));
    enhanced_max_steps[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(r.max_step_count);
    coverage.divisions += r.trials;
    coverage.players_without_efr += r.players_without_efr;
  }
  return {bad == 0, std::to_string(bad) + " violations in 10000 runs, smallest slack over the bound " +
                        std::to_string(min_gap)};
}

Outcome classic_lower_bounds() {
  const ProtocolId ids[] = {ProtocolId::LastDiminisher, ProtocolId::LoneChooser, ProtocolId::LoneDivider,
                            ProtocolId::CutYourOwnPiece, ProtocolId::CutYourOwnPieceLeftRight,
                            ProtocolId::DivideAndConquer, ProtocolId::MinimalEnvyDivideAndConquer,
                            ProtocolId::RecursiveDivideAndChoose};
  std::size_t bad = 0;
  std::size_t runs = 0;
  for (std::size_t col = 0; col < std::size(ids); ++col) {
    const ProtocolId id = ids[col];
    for (int n = 3; n <= 10; ++n) {
      const auto r = verify_dgef_lower_bound(id, n, 500, 4000 + static_cast<std::uint64_t>(n));
      const std::int64_t guaranteed = oracle::kTable[n - 3].values[col];
      bad += r.proportionality_failures + r.lower_bound_failures;
      if (static_cast<std::int64_t>(r.min_efr_observed) < guaranteed) ++bad;
      runs += r.trials;
      coverage.divisions += r.trials;
      coverage.players_without_efr += r.players_without_efr;
    }
  }
  return {bad == 0, std::to_string(bad) + " violations in " + std::to_string(runs) + " runs"};
}

Outcome selfridge_conway_envy_free() {
  const auto r = verify_dgef_lower_bound(ProtocolId::SelfridgeConway, 3, 2000, 5000);
  coverage.divisions += r.trials;
  coverage.players_without_efr += r.players_without_efr;
  const bool pass = r.min_efr_observed == 6 && r.max_efr_observed == 6 && r.proportionality_failures == 0;
  return {pass, "efr_count range " + std::to_string(r.min_efr_observed) + ".." + std::to_string(r.max_efr_observed) +
                    " over 2000 runs"};
}

Outcome worst_case_fixture() {
  const auto f = testing_support::worst_case_fixture();
  const auto rep = fairness_report(f.division, f.profile);
  coverage.divisions += 1;
  coverage.players_without_efr += rep.players_without_efr.size();
  return {rep.efr_count == 4 && oracle::efr_count(f.division, f.profile) == 4 && rep.proportional,
          "efr_count " + std::to_string(rep.efr_count)};
}

Outcome strategy_proofness() {
  struct Target {
    ProtocolId id;
    int lo, hi;
  };
  const Target targets[] = {{ProtocolId::EnhancedFour, 4, 4},
                            {ProtocolId::StrongFairFour, 4, 4},
                            {ProtocolId::EnhancedGeneral, 4, 8},
                            {ProtocolId::StrongFairGeneral, 4, 8}};
  const auto kinds = all_cheat_kinds();
  std::size_t truthful_bad = 0, runs = 0, aborted = 0, interior_below = 0, boundary_below = 0;
  for (const auto& t : targets) {
    for (int n = t.lo; n <= t.hi; ++n) {
      const auto r = check_strategy_proofness(t.id, n, 500, kinds, 7000 + static_cast<std::uint64_t>(n));
      truthful_bad += r.truthful_violations;
      runs += r.trials;
      for (const auto& s : r.per_policy) {
        aborted += s.aborted;
        if (s.kind == CheatKind::ShiftTowardInterior) interior_below += s.cheater_below_share;
        if (s.kind == CheatKind::ShiftTowardBoundary) boundary_below += s.cheater_below_share;
      }
      coverage.divisions += r.completed;
      coverage.players_without_efr += r.truthful_without_efr;
    }
  }
  const bool pass = truthful_bad == 0 && interior_below > 0 && boundary_below > 0;
  return {pass, std::to_string(truthful_bad) + " truthful players below 1/n in " + std::to_string(runs) +
                    " runs (" + std::to_string(aborted) + " aborted); cheater below 1/n: interior " +
                    std::to_string(interior_below) + ", boundary " + std::to_string(boundary_below)};
}

struct StrongOutcome {
  bool found = false;
  bool strict = false;
  std::size_t without_efr = 0;
};

Outcome strong_fair() {
  std::size_t bad = 0, runs = 0, resampled = 0;
  for (int n = 4; n <= 8; ++n) {
    const ProtocolId ids[] = {ProtocolId::StrongFairFour, ProtocolId::StrongFairGeneral};
    for (auto id : ids) {
      if (!supports(id, n)) continue;
      std::vector<std::size_t> tries(500, 0);
      const auto outs = run_trials<StrongOutcome>(500, 0, [&](std::uint64_t t) {
        StrongOutcome o;
        for (std::uint64_t a = 0; a < 64; ++a) {
          const auto p = trial_profile(n, 8000 + static_cast<std::uint64_t>(n), t * 64 + a);
          const auto r = run_protocol(id, p, {false, false});
          if (r.strong_fair_fallback) {
            ++tries[t];
            continue;
          }
          const auto f = fairness_report(r.division, p);
          o.found = true;
          o.strict = f.strong_fair;
          o.without_efr = f.players_without_efr.size();
          break;
        }
        return o;
      });
      for (std::size_t t = 0; t < outs.size(); ++t) {
        bad += !(outs[t].found && outs[t].strict);
        resampled += tries[t];
        coverage.divisions += outs[t].found;
        coverage.players_without_efr += outs[t].without_efr;
      }
      runs += outs.size();
    }
  }
  return {bad == 0, std::to_string(bad) + " runs not strictly above 1/n out of " + std::to_string(runs) + " (" +
                        std::to_string(resampled) + " profiles resampled for tied marks)"};
}

Outcome step_bound() {
  std::size_t bad = 0;
  std::string worst;
  for (int n = 3; n <= 12; ++n) {
    const auto steps = enhanced_max_steps[static_cast<std::size_t>(n)];
    if (steps < 0) return {false, "criterion 3 did not run"};
    if (steps > oracle::enhanced_step_bound(n)) ++bad;
    if (n == 12) worst = "n=12 max " + std::to_string(steps) + " of " + std::to_string(oracle::enhanced_step_bound(n));
  }
  return {bad == 0, std::to_string(bad) + " player counts over budget; " + worst};
}

Outcome per_player_bound() {
  return {coverage.players_without_efr == 0 && coverage.divisions > 0,
          std::to_string(coverage.players_without_efr) + " players without an envy-free relation in " +
              std::to_string(coverage.divisions) + " divisions"};
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "DGEF table exactness", 1, table_exactness);
  all &= report(2, "halving recurrence equals closed form", 5, recurrence_closed_form);
  all &= report(3, "enhanced protocol lower bound", 300, enhanced_lower_bound);
  all &= report(4, "classic protocol lower bounds", 600, classic_lower_bounds);
  all &= report(5, "Selfridge-Conway envy-freeness", 60, selfridge_conway_envy_free);
  all &= report(6, "worst-case fixture", 0, worst_case_fixture);
  all &= report(7, "strategy-proofness", 300, strategy_proofness);
  all &= report(8, "strong-fair variants", 120, strong_fair);
  all &= report(9, "step bound", 0, step_bound);
  all &= report(10, "per-player envy-free relation", 0, per_player_bound);
  std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}

#include <doctest.h>

#include <algorithm>
#include <string>

#include "cakecut/errors.hpp"
#include "cakecut/io.hpp"
#include "cakecut/random_profile.hpp"
#include "cakecut/strategy.hpp"
#include "support.hpp"

using namespace testing_support;

// Protocol code sees players only through the mediator; it offers no way to read a valuation.
template <typename M>
concept ExposesValuations = requires(const M& m) { m.valuation(0); } || requires(const M& m) { m.agents(); } ||
                            requires(const M& m) { m.profile(); } || requires(const M& m) { m.agent(0); };
static_assert(!ExposesValuations<Mediator>);

TEST_CASE("protocol registry") {
  CHECK(parse_protocol("enhanced") == ProtocolId::EnhancedGeneral);
  CHECK(parse_protocol("cut_and_choose") == ProtocolId::CutAndChoose);
  CHECK(parse_protocol("strong_fair_four") == ProtocolId::StrongFairFour);
  CHECK_FALSE(parse_protocol("nonsense").has_value());
  for (const auto& info : all_protocols()) CHECK(parse_protocol(info.name) == info.id);
  CHECK(supports(ProtocolId::CutAndChoose, 2));
  CHECK_FALSE(supports(ProtocolId::CutAndChoose, 3));
  CHECK(supports(ProtocolId::LastDiminisher, 40));
  CHECK_FALSE(supports(ProtocolId::EnhancedFour, 5));
}

TEST_CASE("unsupported player counts are rejected before any query") {
  try {
    run(ProtocolId::CutAndChoose, uniform_profile(3));
    FAIL("expected UnsupportedPlayerCount");
  } catch (const UnsupportedPlayerCount& e) {
    CHECK(std::string(e.what()).find("got 3") != std::string::npos);
  }
  CHECK_THROWS_AS(run(ProtocolId::SelfridgeConway, uniform_profile(4)), UnsupportedPlayerCount);
  CHECK_THROWS_AS(run(ProtocolId::EnhancedGeneral, uniform_profile(2)), UnsupportedPlayerCount);
}

TEST_CASE("two uniform players cut and choose") {
  const auto r = run(ProtocolId::CutAndChoose, uniform_profile(2));
  // the chooser breaks the tie toward the left half
  CHECK(r.division.portions[0] == piece("1/2", "1"));
  CHECK(r.division.portions[1] == piece("0", "1/2"));
  const auto ledger = query_ledger(r);
  CHECK(ledger.counts[0] == std::array<std::size_t, 3>{0, 1, 0});
  CHECK(ledger.counts[1] == std::array<std::size_t, 3>{0, 0, 1});
  CHECK(ledger.total() == 2);
  CHECK(r.query_log.size() == 2);
}

TEST_CASE("empty ledger") {
  ProtocolResult r;
  r.tally.counts.assign(3, {0, 0, 0});
  const auto l = query_ledger(r);
  CHECK(l.total() == 0);
  CHECK(l.total(QueryKind::Mark) == 0);
}

TEST_CASE("five uniform players under the enhanced protocol") {
  const auto r = run(ProtocolId::EnhancedGeneral, uniform_profile(5));
  CHECK(r.division.portions[0] == piece("0", "1/5"));
  CHECK(r.division.portions[1] == piece("4/5", "1"));
  const auto fair = fairness_report(r.division, uniform_profile(5));
  for (const auto& v : fair.own_values) CHECK(v == q("1/5"));
  CHECK(fair.efr_count == 20);

  const auto step1 = std::count_if(r.query_log.begin(), r.query_log.end(), [](const QueryRecord& rec) {
    return rec.step == "1" && rec.kind == QueryKind::Mark;
  });
  CHECK(step1 == 10);
}

TEST_CASE("tally and log agree; the log can be switched off") {
  const auto profile = random_profile(6, 4, 11);
  for (const auto& info : all_protocols()) {
    if (!supports(info.id, 6)) continue;
    const auto logged = run_protocol(info.id, profile, {false, true});
    const auto quiet = run_protocol(info.id, profile, {false, false});
    CHECK(logged.query_log.size() == logged.tally.total());
    CHECK(quiet.query_log.empty());
    CHECK(query_ledger(logged) == logged.tally);
    CHECK(query_ledger(quiet) == logged.tally);
    CHECK(quiet.division.portions == logged.division.portions);
  }
}

TEST_CASE("tracing records stages without changing the outcome") {
  const auto profile = random_profile(5, 3, 5);
  const auto plain = run_protocol(ProtocolId::EnhancedGeneral, profile);
  const auto traced = run_protocol(ProtocolId::EnhancedGeneral, profile, {true, true});
  CHECK(plain.stage_trace.empty());
  CHECK_FALSE(traced.stage_trace.empty());
  CHECK(plain.division.portions == traced.division.portions);
}

TEST_CASE("runs are deterministic") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    for (int n = 2; n <= 7; ++n) {
      const auto profile = random_profile(n, 6, seed * 100 + static_cast<std::uint64_t>(n));
      for (const auto& info : all_protocols()) {
        if (!supports(info.id, n)) continue;
        CHECK(fingerprint(run_protocol(info.id, profile, {true, true})) ==
              fingerprint(run_protocol(info.id, profile, {true, true})));
      }
    }
  }
}

TEST_CASE("a lying player does not stop a classic protocol") {
  const auto profile = random_profile(4, 4, 3);
  const auto run = run_with_cheater(ProtocolId::LastDiminisher, profile, 1,
                                    CheaterPolicy::shift_toward_interior(Rational(1, 3)));
  CHECK(verify_partition(run.result.division).ok());
  CHECK(run.fairness.own_values.size() == 4);
}

TEST_CASE("agent ids must match their seats") {
  std::vector<PlayerAgent> agents{PlayerAgent(1, ValuationFunction::uniform()),
                                  PlayerAgent(0, ValuationFunction::uniform())};
  CHECK_THROWS_AS(run_protocol(ProtocolId::CutAndChoose, agents), std::invalid_argument);
}

TEST_CASE("declared step bounds") {
  CHECK(declared_step_bound(ProtocolId::SelfridgeConway, 3) == 9u);
  CHECK(declared_step_bound(ProtocolId::EnhancedFour, 4) == 12u);
  CHECK(declared_step_bound(ProtocolId::EnhancedGeneral, 5) == 7u + 3u * 3u + 13u);
  CHECK(declared_step_bound(ProtocolId::EnhancedGeneral, 8) == 14u + 3u * (6u + 4u) + 13u);
  CHECK_FALSE(declared_step_bound(ProtocolId::LoneChooser, 5).has_value());
}

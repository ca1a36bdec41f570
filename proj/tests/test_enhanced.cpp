#include <doctest.h>

#include "cakecut/dgef.hpp"
#include "cakecut/random_profile.hpp"
#include "cakecut/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace testing_support;

TEST_CASE("four uniform players") {
  const auto u = uniform_profile(4);
  const auto r = run(ProtocolId::EnhancedFour, u);
  CHECK(r.division.portions[0] == piece("3/4", "1"));
  for (std::size_t i = 1; i < 4; ++i) CHECK(r.division.portions[i].width() == q("1/4"));
  CHECK(fairness_report(r.division, u).efr_count == 12);
  CHECK(r.step_count <= 12);
}

TEST_CASE("four players: the exiting player can envy two others") {
  const std::vector<ValuationFunction> p{
      ValuationFunction::uniform(),
      ValuationFunction::uniform(),
      ValuationFunction::uniform(),
      density({"0", "7/12", "7/8", "1"}, {"15/14", "3/7", "2"}),
  };
  const auto r = run(ProtocolId::EnhancedFour, p);
  CHECK(r.division.portions[3] == piece("7/8", "1"));
  const auto values = value_table(r.division, p);
  CHECK(values[3][3] == q("1/4"));
  CHECK(values[3][0] == q("1/8"));
  CHECK(values[3][1] == q("5/16"));
  CHECK(values[3][2] == q("5/16"));
  const auto f = fairness_report(r.division, p);
  CHECK(f.envy(3, 1));
  CHECK(f.envy(3, 2));
  CHECK(f.efr_count == 10);
}

TEST_CASE("three players fall through to Selfridge-Conway") {
  const auto p = random_profile(3, 5, 17);
  CHECK(run(ProtocolId::EnhancedGeneral, p).division.portions == run(ProtocolId::SelfridgeConway, p).division.portions);
}

TEST_CASE("six uniform players") {
  const auto u = uniform_profile(6);
  const auto r = run(ProtocolId::EnhancedGeneral, u);
  CHECK(r.division.portions[0] == piece("0", "1/6"));
  CHECK(r.division.portions[1] == piece("5/6", "1"));
  CHECK(r.division.portions[2] == piece("2/3", "5/6"));
  PieceSet rest;
  for (std::size_t i = 3; i < 6; ++i) rest = rest.unite(r.division.portions[i]);
  CHECK(rest == piece("1/6", "2/3"));
  for (const auto& v : fairness_report(r.division, u).own_values) CHECK(v == q("1/6"));
}

TEST_CASE("inner loop: one player holds both extreme marks") {
  std::vector<ValuationFunction> p = uniform_profile(5);
  p[0] = density({"0", "1/4", "3/4", "1"}, {"9/5", "1/5", "9/5"});
  const auto r = run(ProtocolId::EnhancedGeneral, p);
  REQUIRE(r.rounds.size() == 1);
  CHECK(r.rounds[0].left_exit == 0);
  CHECK(r.rounds[0].right_exit == 1);
  CHECK(r.rounds[0].inner_iterations == 2);
  CHECK(r.rounds[0].lambda == q("1/9"));
  CHECK(r.division.portions[0] == piece("0", "1/9"));
  CHECK(r.division.portions[1] == piece("26/45", "7/9"));
  const auto f = fairness_report(r.division, p);
  CHECK(f.own_values[0] == q("1/5"));
  CHECK(f.own_values[1] == q("1/5"));
  CHECK(f.proportional);
}

TEST_CASE("property: exits are worth exactly the running share to the leaver and at most that to the rest") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    const auto p = random_profile(n, 6, seed);
    const auto r = run(ProtocolId::EnhancedGeneral, p);
    REQUIRE(r.rounds.size() == static_cast<std::size_t>(oracle::ceil_half(n - 4)));
    for (const auto& round : r.rounds) {
      const Rational share(1, round.s);
      const auto left = round.subcake.clip(round.subcake.lo(), round.lambda);
      const auto j = static_cast<std::size_t>(round.left_exit);
      const auto k = static_cast<std::size_t>(round.right_exit);
      CHECK(oracle::value(p[j], left) == share * oracle::value(p[j], round.subcake));
      CHECK(r.division.portions[j] == left);
      const Rational ck = oracle::value(p[k], r.division.portions[k]);
      CHECK(ck == share * oracle::value(p[k], round.subcake));
    }
  }
}

TEST_CASE("property: guarantees and the step budget on random profiles") {
  for (int n = 3; n <= 9; ++n) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const auto p = trial_profile(n, 99, seed);
      const auto r = run(ProtocolId::EnhancedGeneral, p);
      const auto f = fairness_report(r.division, p);
      CAPTURE(n);
      CAPTURE(seed);
      CHECK(f.proportional);
      CHECK(static_cast<std::int64_t>(f.efr_count) >= dgef_formula(ProtocolId::EnhancedGeneral, n));
      CHECK(static_cast<std::int64_t>(r.step_count) <= oracle::enhanced_step_bound(n));
    }
  }
}

TEST_CASE("strong-fair four: the leaver takes everything right of the midpoint to the runner-up mark") {
  const std::vector<ValuationFunction> p{right_mark_at(q("7/10")), right_mark_at(q("18/25")), right_mark_at(q("3/4")),
                                         right_mark_at(q("4/5"))};
  const auto r = run(ProtocolId::StrongFairFour, p);
  CHECK_FALSE(r.strong_fair_fallback);
  CHECK(r.division.portions[3] == piece("31/40", "1"));
  const auto f = fairness_report(r.division, p);
  CHECK(f.own_values[3] == q("35/128"));
  CHECK(f.strong_fair);
}

TEST_CASE("strong-fair variants fall back on ties") {
  const auto u4 = uniform_profile(4);
  const auto r4 = run(ProtocolId::StrongFairFour, u4);
  CHECK(r4.strong_fair_fallback);
  CHECK_FALSE(r4.fallback_stages.empty());
  CHECK(r4.division.portions == run(ProtocolId::EnhancedFour, u4).division.portions);

  const auto u6 = uniform_profile(6);
  const auto r6 = run(ProtocolId::StrongFairGeneral, u6);
  CHECK(r6.strong_fair_fallback);
  CHECK(r6.division.portions == run(ProtocolId::EnhancedGeneral, u6).division.portions);
}

TEST_CASE("property: strong-fair variants are strictly fair when marks are distinct") {
  int checked = 0;
  for (int n = 4; n <= 7; ++n) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const auto p = trial_profile(n, 7, seed);
      const auto id = n == 4 && seed % 2 ? ProtocolId::StrongFairFour : ProtocolId::StrongFairGeneral;
      const auto r = run(id, p);
      if (r.strong_fair_fallback) continue;
      ++checked;
      CAPTURE(n);
      CAPTURE(seed);
      CHECK(fairness_report(r.division, p).strong_fair);
    }
  }
  CHECK(checked > 40);
}

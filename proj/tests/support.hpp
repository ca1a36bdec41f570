#pragma once

#include <string_view>
#include <vector>

#include "cakecut/division.hpp"
#include "cakecut/engine.hpp"
#include "cakecut/piece_set.hpp"
#include "cakecut/rational.hpp"
#include "cakecut/valuation.hpp"

namespace testing_support {

using namespace cakecut;

inline Rational q(std::string_view s) { return Rational::parse(s); }

inline PieceSet piece(std::string_view lo, std::string_view hi) { return PieceSet::single(q(lo), q(hi)); }

inline PieceSet pieces(std::initializer_list<std::pair<std::string_view, std::string_view>> ivs) {
  std::vector<Interval> out;
  for (const auto& [a, b] : ivs) out.push_back({q(a), q(b)});
  return PieceSet(std::move(out));
}

inline ValuationFunction density(std::initializer_list<std::string_view> breakpoints,
                                 std::initializer_list<std::string_view> densities) {
  std::vector<Rational> b, d;
  for (auto s : breakpoints) b.push_back(q(s));
  for (auto s : densities) d.push_back(q(s));
  return ValuationFunction::make(std::move(b), std::move(d));
}

// 3/2 on [0,1/2), 1/2 on [1/2,1]
inline ValuationFunction split_density() { return density({"0", "1/2", "1"}, {"3/2", "1/2"}); }

inline std::vector<ValuationFunction> uniform_profile(int n) {
  return std::vector<ValuationFunction>(static_cast<std::size_t>(n), ValuationFunction::uniform());
}

// Worth `tail` to the right of `mark`, the rest spread evenly to its left.
inline ValuationFunction right_mark_at(const Rational& mark, const Rational& tail = Rational(1, 4)) {
  return ValuationFunction::make({Rational(0), mark, Rational(1)},
                                 {(Rational(1) - tail) / mark, tail / (Rational(1) - mark)});
}

// Quarters division where each player values its own quarter 4/16, the next
// player's 2/16 and the remaining two 5/16 each.
struct WorstCaseFixture {
  std::vector<ValuationFunction> profile;
  Division division;
};

inline WorstCaseFixture worst_case_fixture() {
  WorstCaseFixture f;
  const std::vector<Rational> quarters{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  for (int i = 0; i < 4; ++i) {
    std::vector<Rational> dens(4, Rational(5, 4));
    dens[static_cast<std::size_t>(i)] = Rational(1);
    dens[static_cast<std::size_t>((i + 1) % 4)] = Rational(1, 2);
    f.profile.push_back(ValuationFunction::make(quarters, dens));
    f.division.portions.push_back(PieceSet::single(quarters[static_cast<std::size_t>(i)],
                                                   quarters[static_cast<std::size_t>(i) + 1]));
  }
  return f;
}

inline ProtocolResult run(ProtocolId id, const std::vector<ValuationFunction>& profile) {
  return run_protocol(id, profile);
}

}  // namespace testing_support

#pragma once

#include <span>
#include <vector>

#include "cakecut/piece_set.hpp"
#include "cakecut/valuation.hpp"

namespace cakecut {

/// One portion per player; portions[i] belongs to player p_{i+1}.
struct Division {
  std::vector<PieceSet> portions;
  PieceSet domain = PieceSet::whole();

  std::size_t n() const { return portions.size(); }
};

struct PartitionReport {
  std::vector<Interval> gaps;       // parts of the domain nobody owns
  std::vector<Interval> overlaps;   // parts owned by two or more players
  std::vector<Interval> outside;    // owned parts lying outside the domain
  std::vector<std::size_t> empty_portions;

  bool ok() const { return gaps.empty() && overlaps.empty() && outside.empty() && empty_portions.empty(); }
};

PartitionReport verify_partition(const Division& d);

/// envies[i][j] is true iff v_i(C_i) < v_i(C_j); the diagonal is always false.
struct EnvyMatrix {
  std::vector<std::vector<bool>> envies;

  std::size_t n() const { return envies.size(); }
  bool operator()(std::size_t i, std::size_t j) const { return envies[i][j]; }
};

/// Per-player values: values[i][j] = v_i(C_j).
std::vector<std::vector<Rational>> value_table(const Division& d, std::span<const ValuationFunction> profile);

EnvyMatrix envy_matrix(const Division& d, std::span<const ValuationFunction> profile);
EnvyMatrix envy_matrix_from_values(const std::vector<std::vector<Rational>>& values);

/// Number of ordered pairs (i, j), i != j, where p_i does not envy p_j.
std::size_t count_envy_free_relations(const EnvyMatrix& m);

struct FairnessReport {
  bool proportional = false;   // every v_i(C_i) >= 1/n
  bool strong_fair = false;    // every v_i(C_i) >  1/n
  bool envy_free = false;      // efr_count == n(n-1)
  std::size_t efr_count = 0;
  std::vector<Rational> own_values;
  EnvyMatrix envy;
  /// Players with no envy-free-relation at all; empty in every proportional division.
  std::vector<std::size_t> players_without_efr;
};

FairnessReport fairness_report(const Division& d, std::span<const ValuationFunction> profile);

}  // namespace cakecut

#include "cakecut/division.hpp"

#include <stdexcept>
#include <string>

namespace cakecut {

PartitionReport verify_partition(const Division& d) {
  PartitionReport r;
  PieceSet covered;
  for (std::size_t i = 0; i < d.portions.size(); ++i) {
    if (d.portions[i].empty()) r.empty_portions.push_back(i);
    for (std::size_t j = i + 1; j < d.portions.size(); ++j) {
      const auto both = d.portions[i].intersect(d.portions[j]);
      r.overlaps.insert(r.overlaps.end(), both.intervals().begin(), both.intervals().end());
    }
    covered = covered.unite(d.portions[i]);
  }
  const auto gaps = d.domain.minus(covered);
  const auto outside = covered.minus(d.domain);
  r.gaps = gaps.intervals();
  r.outside = outside.intervals();
  r.overlaps = PieceSet(r.overlaps).intervals();
  return r;
}

std::vector<std::vector<Rational>> value_table(const Division& d, std::span<const ValuationFunction> profile) {
  if (profile.size() != d.n()) {
    throw std::invalid_argument("profile has " + std::to_string(profile.size()) + " valuations for " +
                                std::to_string(d.n()) + " portions");
  }
  std::vector<std::vector<Rational>> values(d.n(), std::vector<Rational>(d.n()));
  for (std::size_t i = 0; i < d.n(); ++i) {
    for (std::size_t j = 0; j < d.n(); ++j) values[i][j] = eval_pieces(profile[i], d.portions[j]);
  }
  return values;
}

EnvyMatrix envy_matrix_from_values(const std::vector<std::vector<Rational>>& values) {
  const std::size_t n = values.size();
  EnvyMatrix m{std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) m.envies[i][j] = values[i][i] < values[i][j];
    }
  }
  return m;
}

EnvyMatrix envy_matrix(const Division& d, std::span<const ValuationFunction> profile) {
  return envy_matrix_from_values(value_table(d, profile));
}

std::size_t count_envy_free_relations(const EnvyMatrix& m) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (i != j && !m.envies[i][j]) ++count;
    }
  }
  return count;
}

FairnessReport fairness_report(const Division& d, std::span<const ValuationFunction> profile) {
  const auto values = value_table(d, profile);
  const std::size_t n = d.n();
  FairnessReport r;
  r.envy = envy_matrix_from_values(values);
  r.efr_count = count_envy_free_relations(r.envy);
  r.envy_free = r.efr_count == n * (n - 1);
  const Rational share(1, static_cast<std::int64_t>(n));
  r.proportional = true;
  r.strong_fair = true;
  for (std::size_t i = 0; i < n; ++i) {
    r.own_values.push_back(values[i][i]);
    if (values[i][i] < share) r.proportional = false;
    if (!(share < values[i][i])) r.strong_fair = false;
    bool has_efr = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && !r.envy.envies[i][j]) has_efr = true;
    }
    if (!has_efr && n > 1) r.players_without_efr.push_back(i);
  }
  return r;
}

}  // namespace cakecut

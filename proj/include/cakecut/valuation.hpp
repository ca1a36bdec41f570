#pragma once

#include <string>
#include <vector>

#include "cakecut/piece_set.hpp"
#include "cakecut/rational.hpp"

namespace cakecut {

/// A player's measure on [0,1]: a piecewise-constant density with exact
/// rational breakpoints. Construction never validates; see validate_valuation
/// and ValuationFunction::make.
class ValuationFunction {
 public:
  ValuationFunction() = default;
  ValuationFunction(std::vector<Rational> breakpoints, std::vector<Rational> densities);

  /// Validates and throws InvalidValuation listing every violated axiom.
  static ValuationFunction make(std::vector<Rational> breakpoints, std::vector<Rational> densities);
  static ValuationFunction uniform();

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& densities() const { return densities_; }

  /// Value of [0, x]. Requires a well-formed function.
  Rational cumulative(const Rational& x) const;
  /// Smallest x with cumulative(x) == u.
  Rational inverse(const Rational& u) const;

  friend bool operator==(const ValuationFunction& a, const ValuationFunction& b) {
    return a.breakpoints_ == b.breakpoints_ && a.densities_ == b.densities_;
  }

 private:
  void require_shape() const;

  std::vector<Rational> breakpoints_;
  std::vector<Rational> densities_;
  std::vector<Rational> prefix_;  // prefix_[k] = value of [0, breakpoints_[k]]
  bool well_formed_ = false;
};

struct ValidationReport {
  bool breakpoints_ok = true;   // starts at 0, ends at 1, strictly ascending, sizes match
  bool positivity_ok = true;    // every density > 0
  bool normalization_ok = true; // total mass exactly 1
  std::vector<std::string> violations;

  bool ok() const { return breakpoints_ok && positivity_ok && normalization_ok; }
};

ValidationReport validate_valuation(const ValuationFunction& v);

/// Exact value of [x, y]. Throws DomainError unless 0 <= x <= y <= 1.
Rational eval(const ValuationFunction& v, const Rational& x, const Rational& y);
Rational eval_pieces(const ValuationFunction& v, const PieceSet& pieces);

/// The point y in `domain` such that the part of `domain` between x and y
/// (in concatenation order) is worth exactly alpha. Throws InsufficientValue
/// when less than alpha lies to the right of x.
Rational mark_rightward(const ValuationFunction& v, const Rational& x, const Rational& alpha,
                        const PieceSet& domain);
/// Mirror of mark_rightward, measuring leftward from y.
Rational mark_leftward(const ValuationFunction& v, const Rational& y, const Rational& alpha,
                       const PieceSet& domain);

}  // namespace cakecut

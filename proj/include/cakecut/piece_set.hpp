#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cakecut/rational.hpp"

namespace cakecut {

/// Subinterval [lo, hi) of the cake; the interval ending at 1 is read as closed.
/// Endpoint ownership carries no value, so the convention only matters for printing.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool empty() const { return !(lo < hi); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// "[lo, hi)" or "[lo, 1/1]" when the interval closes the cake.
std::string to_string(const Interval& iv);

/// A portion of the cake: sorted, pairwise disjoint, non-touching intervals.
/// Touching intervals are merged and zero-width ones dropped on construction.
class PieceSet {
 public:
  PieceSet() = default;
  PieceSet(std::initializer_list<Interval> intervals);
  explicit PieceSet(std::vector<Interval> intervals);

  static PieceSet whole() { return PieceSet{{Rational(0), Rational(1)}}; }
  static PieceSet single(Rational lo, Rational hi) { return PieceSet{{std::move(lo), std::move(hi)}}; }

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  /// Leftmost / rightmost point; requires !empty().
  const Rational& lo() const;
  const Rational& hi() const;

  Rational width() const;

  /// Portion of this set lying inside [a, b]; in concatenation order this is
  /// the stretch of the set between the two points.
  PieceSet clip(const Rational& a, const Rational& b) const;
  PieceSet unite(const PieceSet& other) const;
  PieceSet minus(const PieceSet& other) const;
  PieceSet intersect(const PieceSet& other) const;

  /// Concatenated width of the set left of x.
  Rational length_before(const Rational& x) const;
  /// Inverse of length_before: the point whose concatenated offset is len.
  /// Lands on an interval's right end rather than the next one's left end.
  Rational point_at_length(const Rational& len) const;

  friend bool operator==(const PieceSet&, const PieceSet&) = default;

 private:
  void normalize();
  std::vector<Interval> intervals_;
};

std::string to_string(const PieceSet& p);

}  // namespace cakecut

#pragma once

// Independent reference computations. They share only the Rational type and
// the raw breakpoint/density data with the library, never its algorithms.

#include <cstdint>
#include <span>
#include <vector>

#include "cakecut/division.hpp"
#include "cakecut/piece_set.hpp"
#include "cakecut/rational.hpp"
#include "cakecut/valuation.hpp"

namespace oracle {

using cakecut::PieceSet;
using cakecut::Rational;
using cakecut::ValuationFunction;

// Segment-by-segment overlap sum; no prefix sums.
inline Rational integral(const ValuationFunction& v, const Rational& x, const Rational& y) {
  const auto& b = v.breakpoints();
  const auto& d = v.densities();
  Rational total(0);
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    const Rational lo = cakecut::max(b[k], x);
    const Rational hi = cakecut::min(b[k + 1], y);
    if (lo < hi) total += d[k] * (hi - lo);
  }
  return total;
}

inline Rational value(const ValuationFunction& v, const PieceSet& p) {
  Rational total(0);
  for (const auto& iv : p.intervals()) total += integral(v, iv.lo, iv.hi);
  return total;
}

// Walks domain intervals left to right from x, segment by segment.
inline Rational mark_right(const ValuationFunction& v, const Rational& x, Rational alpha, const PieceSet& domain) {
  const auto& b = v.breakpoints();
  const auto& d = v.densities();
  for (const auto& iv : domain.intervals()) {
    if (!(x < iv.hi)) continue;
    const Rational start = cakecut::max(iv.lo, x);
    for (std::size_t k = 0; k + 1 < b.size(); ++k) {
      const Rational lo = cakecut::max(b[k], start);
      const Rational hi = cakecut::min(b[k + 1], iv.hi);
      if (!(lo < hi)) continue;
      const Rational here = d[k] * (hi - lo);
      if (alpha <= here) return lo + alpha / d[k];
      alpha -= here;
    }
  }
  throw std::domain_error("oracle: not enough value");
}

inline Rational mark_left(const ValuationFunction& v, const Rational& y, Rational alpha, const PieceSet& domain) {
  const auto& b = v.breakpoints();
  const auto& d = v.densities();
  const auto& ivs = domain.intervals();
  for (auto it = ivs.rbegin(); it != ivs.rend(); ++it) {
    if (!(it->lo < y)) continue;
    const Rational end = cakecut::min(it->hi, y);
    for (std::size_t k = b.size() - 1; k-- > 0;) {
      const Rational lo = cakecut::max(b[k], it->lo);
      const Rational hi = cakecut::min(b[k + 1], end);
      if (!(lo < hi)) continue;
      const Rational here = d[k] * (hi - lo);
      if (alpha <= here) return hi - alpha / d[k];
      alpha -= here;
    }
  }
  throw std::domain_error("oracle: not enough value");
}

// Counts ordered pairs (i, j), i != j, with v_i(C_i) >= v_i(C_j).
inline std::size_t efr_count(const cakecut::Division& div, std::span<const ValuationFunction> profile) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < div.n(); ++i) {
    const Rational own = value(profile[i], div.portions[i]);
    for (std::size_t j = 0; j < div.n(); ++j) {
      if (i != j && !(own < value(profile[i], div.portions[j]))) ++count;
    }
  }
  return count;
}

inline int floor_log2(std::int64_t n) {
  int l = 0;
  while ((std::int64_t{2} << l) <= n) ++l;
  return l;
}

// Halving recursion evaluated without memoization.
inline std::int64_t halving(std::int64_t n) { return n <= 1 ? 0 : halving(n / 2) + halving(n - n / 2) + n; }

inline std::int64_t ceil_half(std::int64_t a) { return a <= 0 ? 0 : (a + 1) / 2; }

// Step budget of the general enhanced protocol.
inline std::int64_t enhanced_step_bound(std::int64_t n) {
  const std::int64_t r = ceil_half(n - 4);
  std::int64_t sum = 0;
  for (std::int64_t i = 1; i <= r; ++i) sum += n - 2 * i;
  return 7 * r + 3 * sum + 13;
}

// Guaranteed envy-free relations, column order: last diminisher, lone chooser,
// lone divider, cut-your-own-piece, its left-right variant, divide and conquer,
// its minimal-envy variant, recursive divide and choose, enhanced.
struct TableRow {
  int n;
  std::int64_t values[9];
};

inline constexpr TableRow kTable[] = {
    {3, {5, 3, 4, 3, 4, 5, 5, 3, 6}},         {4, {8, 4, 6, 4, 6, 8, 8, 4, 10}},
    {5, {12, 5, 8, 5, 8, 12, 12, 5, 14}},     {6, {17, 6, 10, 6, 10, 16, 16, 6, 19}},
    {7, {23, 7, 12, 7, 12, 20, 20, 7, 26}},   {8, {30, 8, 14, 8, 14, 24, 24, 8, 33}},
    {9, {38, 9, 16, 9, 16, 29, 29, 9, 42}},   {10, {47, 10, 18, 10, 18, 34, 34, 10, 51}},
    {11, {57, 11, 20, 11, 20, 39, 39, 11, 62}}, {12, {68, 12, 22, 12, 22, 44, 44, 12, 73}},
};

}  // namespace oracle

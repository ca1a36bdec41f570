#include "cakecut/valuation.hpp"

#include <algorithm>

#include "cakecut/errors.hpp"

namespace cakecut {

namespace {

void check_unit_range(const Rational& x, const char* what) {
  if (x.sign() < 0 || Rational(1) < x) throw DomainError(std::string(what) + " " + x.str() + " outside [0,1]");
}

void check_domain_point(const Rational& x, const PieceSet& domain) {
  check_unit_range(x, "mark anchor");
  if (domain.empty()) throw DomainError("mark in empty domain");
  if (x < domain.lo() || domain.hi() < x) {
    throw DomainError("anchor " + x.str() + " outside domain " + to_string(domain));
  }
}

}  // namespace

ValuationFunction::ValuationFunction(std::vector<Rational> breakpoints, std::vector<Rational> densities)
    : breakpoints_(std::move(breakpoints)), densities_(std::move(densities)) {
  well_formed_ = validate_valuation(*this).breakpoints_ok;
  if (!well_formed_) return;
  prefix_.reserve(breakpoints_.size());
  prefix_.emplace_back(0);
  for (std::size_t k = 0; k < densities_.size(); ++k) {
    prefix_.push_back(prefix_.back() + densities_[k] * (breakpoints_[k + 1] - breakpoints_[k]));
  }
}

ValuationFunction ValuationFunction::make(std::vector<Rational> breakpoints, std::vector<Rational> densities) {
  ValuationFunction v(std::move(breakpoints), std::move(densities));
  const auto report = validate_valuation(v);
  if (!report.ok()) {
    std::string msg = "invalid valuation:";
    for (const auto& s : report.violations) msg += " " + s + ";";
    throw InvalidValuation(msg);
  }
  return v;
}

ValuationFunction ValuationFunction::uniform() { return ValuationFunction({Rational(0), Rational(1)}, {Rational(1)}); }

ValidationReport validate_valuation(const ValuationFunction& v) {
  ValidationReport r;
  const auto& b = v.breakpoints();
  const auto& d = v.densities();
  if (b.size() < 2) {
    r.breakpoints_ok = false;
    r.violations.push_back("need at least two breakpoints, got " + std::to_string(b.size()));
  } else {
    if (b.size() != d.size() + 1) {
      r.breakpoints_ok = false;
      r.violations.push_back("expected " + std::to_string(b.size() - 1) + " densities, got " +
                             std::to_string(d.size()));
    }
    if (!b.front().is_zero()) {
      r.breakpoints_ok = false;
      r.violations.push_back("first breakpoint is " + b.front().str() + ", expected 0/1");
    }
    if (b.back() != Rational(1)) {
      r.breakpoints_ok = false;
      r.violations.push_back("last breakpoint is " + b.back().str() + ", expected 1/1");
    }
    for (std::size_t k = 0; k + 1 < b.size(); ++k) {
      if (!(b[k] < b[k + 1])) {
        r.breakpoints_ok = false;
        r.violations.push_back("breakpoints not strictly ascending at index " + std::to_string(k + 1));
      }
    }
  }
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k].sign() <= 0) {
      r.positivity_ok = false;
      r.violations.push_back("density " + d[k].str() + " on segment " + std::to_string(k) + " is not positive");
    }
  }
  if (r.breakpoints_ok) {
    Rational total;
    for (std::size_t k = 0; k < d.size(); ++k) total += d[k] * (b[k + 1] - b[k]);
    if (total != Rational(1)) {
      r.normalization_ok = false;
      r.violations.push_back("total value is " + total.str() + ", expected 1/1");
    }
  } else {
    r.normalization_ok = false;
  }
  return r;
}

void ValuationFunction::require_shape() const {
  if (!well_formed_) throw InvalidValuation("valuation has malformed breakpoints");
}

Rational ValuationFunction::cumulative(const Rational& x) const {
  require_shape();
  // segment k with breakpoints_[k] <= x < breakpoints_[k+1]; x == 1 falls in the last one
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t k = static_cast<std::size_t>(it - breakpoints_.begin());
  k = k == 0 ? 0 : k - 1;
  if (k >= densities_.size()) k = densities_.size() - 1;
  return prefix_[k] + densities_[k] * (x - breakpoints_[k]);
}

Rational ValuationFunction::inverse(const Rational& u) const {
  require_shape();
  auto it = std::lower_bound(prefix_.begin(), prefix_.end(), u);
  if (it == prefix_.end()) throw InsufficientValue("cumulative value " + u.str() + " beyond total");
  std::size_t k = static_cast<std::size_t>(it - prefix_.begin());
  if (*it == u) return breakpoints_[k];
  // prefix_[k-1] < u < prefix_[k]
  --k;
  if (densities_[k].sign() <= 0) throw InvalidValuation("cannot invert through a non-positive density");
  return breakpoints_[k] + (u - prefix_[k]) / densities_[k];
}

Rational eval(const ValuationFunction& v, const Rational& x, const Rational& y) {
  check_unit_range(x, "lower bound");
  check_unit_range(y, "upper bound");
  if (y < x) throw DomainError("inverted bounds [" + x.str() + ", " + y.str() + "]");
  if (x == y) return Rational(0);
  return v.cumulative(y) - v.cumulative(x);
}

Rational eval_pieces(const ValuationFunction& v, const PieceSet& pieces) {
  Rational total;
  for (const auto& iv : pieces.intervals()) total += eval(v, iv.lo, iv.hi);
  return total;
}

Rational mark_rightward(const ValuationFunction& v, const Rational& x, const Rational& alpha,
                        const PieceSet& domain) {
  check_domain_point(x, domain);
  if (alpha.sign() < 0) throw DomainError("negative mark value " + alpha.str());
  if (alpha.is_zero()) return x;
  Rational remaining = alpha;
  for (const auto& iv : domain.intervals()) {
    if (!(x < iv.hi)) continue;
    const Rational& start = max(iv.lo, x);
    const Rational base = v.cumulative(start);
    const Rational avail = v.cumulative(iv.hi) - base;
    if (!(avail < remaining)) return v.inverse(base + remaining);
    remaining -= avail;
  }
  throw InsufficientValue("only " + (alpha - remaining).str() + " available right of " + x.str() +
                          ", asked for " + alpha.str());
}

Rational mark_leftward(const ValuationFunction& v, const Rational& y, const Rational& alpha,
                       const PieceSet& domain) {
  check_domain_point(y, domain);
  if (alpha.sign() < 0) throw DomainError("negative mark value " + alpha.str());
  if (alpha.is_zero()) return y;
  Rational remaining = alpha;
  const auto& ivs = domain.intervals();
  for (auto it = ivs.rbegin(); it != ivs.rend(); ++it) {
    if (!(it->lo < y)) continue;
    const Rational& end = min(it->hi, y);
    const Rational top = v.cumulative(end);
    const Rational avail = top - v.cumulative(it->lo);
    if (!(avail < remaining)) {
      // largest point with the requested value: positivity makes it unique
      // inside the interval, and an exact fit lands on the interval's left end
      if (avail == remaining) return it->lo;
      return v.inverse(top - remaining);
    }
    remaining -= avail;
  }
  throw InsufficientValue("only " + (alpha - remaining).str() + " available left of " + y.str() +
                          ", asked for " + alpha.str());
}

}  // namespace cakecut

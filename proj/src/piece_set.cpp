#include "cakecut/piece_set.hpp"

#include <algorithm>

#include "cakecut/errors.hpp"

namespace cakecut {

std::string to_string(const Interval& iv) {
  const bool closed = iv.hi == Rational(1);
  return "[" + iv.lo.str() + ", " + iv.hi.str() + (closed ? "]" : ")");
}

std::string to_string(const PieceSet& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.intervals().size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.intervals()[i]);
  }
  return out + "}";
}

PieceSet::PieceSet(std::initializer_list<Interval> intervals) : intervals_(intervals) { normalize(); }

PieceSet::PieceSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) { normalize(); }

void PieceSet::normalize() {
  for (const auto& iv : intervals_) {
    if (iv.hi < iv.lo) throw DomainError("inverted interval " + to_string(iv));
  }
  std::erase_if(intervals_, [](const Interval& iv) { return iv.empty(); });
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  merged.reserve(intervals_.size());
  for (auto& iv : intervals_) {
    if (!merged.empty() && !(merged.back().hi < iv.lo)) {
      if (merged.back().hi < iv.hi) merged.back().hi = std::move(iv.hi);
    } else {
      merged.push_back(std::move(iv));
    }
  }
  intervals_ = std::move(merged);
}

const Rational& PieceSet::lo() const {
  if (empty()) throw DomainError("empty piece set has no left end");
  return intervals_.front().lo;
}

const Rational& PieceSet::hi() const {
  if (empty()) throw DomainError("empty piece set has no right end");
  return intervals_.back().hi;
}

Rational PieceSet::width() const {
  Rational w;
  for (const auto& iv : intervals_) w += iv.width();
  return w;
}

PieceSet PieceSet::clip(const Rational& a, const Rational& b) const {
  PieceSet out;
  if (!(a < b)) return out;
  for (const auto& iv : intervals_) {
    if (!(iv.lo < b)) break;
    if (!(a < iv.hi)) continue;
    out.intervals_.push_back({max(iv.lo, a), min(iv.hi, b)});
  }
  return out;
}

PieceSet PieceSet::unite(const PieceSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return PieceSet(std::move(all));
}

PieceSet PieceSet::intersect(const PieceSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const auto& a = intervals_[i];
    const auto& b = other.intervals_[j];
    const Rational& lo = max(a.lo, b.lo);
    const Rational& hi = min(a.hi, b.hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a.hi < b.hi) ++i; else ++j;
  }
  return PieceSet(std::move(out));
}

PieceSet PieceSet::minus(const PieceSet& other) const {
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& iv : intervals_) {
    Rational cursor = iv.lo;
    while (j < other.intervals_.size() && !(iv.lo < other.intervals_[j].hi)) ++j;
    for (std::size_t k = j; k < other.intervals_.size(); ++k) {
      const auto& cut = other.intervals_[k];
      if (!(cut.lo < iv.hi)) break;
      if (cursor < cut.lo) out.push_back({cursor, cut.lo});
      if (cursor < cut.hi) cursor = cut.hi;
    }
    if (cursor < iv.hi) out.push_back({cursor, iv.hi});
  }
  return PieceSet(std::move(out));
}

Rational PieceSet::length_before(const Rational& x) const {
  Rational len;
  for (const auto& iv : intervals_) {
    if (!(iv.lo < x)) break;
    len += min(iv.hi, x) - iv.lo;
  }
  return len;
}

Rational PieceSet::point_at_length(const Rational& len) const {
  if (empty()) throw DomainError("point_at_length on empty piece set");
  if (len.sign() < 0) throw DomainError("negative offset " + len.str());
  Rational remaining = len;
  for (const auto& iv : intervals_) {
    const Rational w = iv.width();
    if (!(w < remaining)) return iv.lo + remaining;
    remaining -= w;
  }
  throw DomainError("offset " + len.str() + " exceeds piece set width");
}

}  // namespace cakecut

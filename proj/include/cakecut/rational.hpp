#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cakecut {

/// Exact arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Backed by GMP's mpq.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : q_(static_cast<long>(value)) {}  // NOLINT: implicit by design of numeric literals
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// Always "p/q", e.g. "0/1", "-3/4".
  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  /// Lossy; only for human-readable summaries.
  double approx() const { return q_.get_d(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on zero

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace cakecut

#include "cakecut/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cakecut {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return numerator_str() + "/" + denominator_str(); }
std::string Rational::numerator_str() const { return q_.get_num().get_str(10); }
std::string Rational::denominator_str() const { return q_.get_den().get_str(10); }

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), rhs.q_.get_mpq_t());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), rhs.q_.get_mpq_t());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  mpq_mul(q_.get_mpq_t(), q_.get_mpq_t(), rhs.q_.get_mpq_t());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  mpq_div(q_.get_mpq_t(), q_.get_mpq_t(), rhs.q_.get_mpq_t());
  return *this;
}

}  // namespace cakecut

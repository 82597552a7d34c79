// SPDX-License-Identifier: Apache-2.0

#include "ncreal/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "ncreal/errors.hpp"

namespace ncreal {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Index to_index(const Integer& z) {
  if (z < 0 || !mpz_fits_ulong_p(z.get_mpz_t())) {
    throw std::overflow_error("value does not fit a natural index");
  }
  return static_cast<Index>(mpz_get_ui(z.get_mpz_t()));
}

Rational::Rational(long long value) : value_(Integer(std::to_string(value))) {}

Rational::Rational(unsigned long long value) : value_(Integer(std::to_string(value))) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  const Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational pow2(std::int64_t exponent) {
  Integer p = 1;
  const auto magnitude = static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), magnitude);
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Index least_power_above(const Rational& x) {
  Index k = 0;
  Rational power(1);
  while (!(power > x)) {
    power *= 2;
    ++k;
  }
  return k;
}

Index least_inverse_power_below(const Rational& x) {
  if (x.sign() <= 0) throw std::domain_error("least_inverse_power_below needs x > 0");
  Index k = 0;
  Rational power(1);
  while (!(power < x)) {
    power /= 2;
    ++k;
  }
  return k;
}

}  // namespace ncreal

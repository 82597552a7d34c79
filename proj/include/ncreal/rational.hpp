// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncreal {

/// Natural-number index used for sequence positions, moduli and codes.
using Index = std::uint64_t;

/// Arbitrary-precision integer.
using Integer = mpz_class;

static_assert(sizeof(unsigned long) == sizeof(Index), "Index must map onto GMP's ulong");

inline Integer to_integer(Index i) { return Integer(static_cast<unsigned long>(i)); }

/// Throws std::overflow_error when z is negative or too large for Index.
Index to_index(const Integer& z);

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Text form is "p/q", with "/q" omitted when q = 1.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(unsigned long long value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}

  /// Throws std::domain_error when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Parses "p" or "p/q" (optional leading '-'); throws ParseError.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;  // throws std::domain_error on zero

  /// Largest integer <= this.
  Integer floor() const;
  /// Smallest integer >= this.
  Integer ceil() const;

  std::string str() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  mpq_class value_;
};

/// 2^exponent for any signed exponent.
Rational pow2(std::int64_t exponent);

/// The dyadic tolerance 2^{-n}.
inline Rational tolerance(Index n) { return pow2(-static_cast<std::int64_t>(n)); }

/// 4^{-n}.
inline Rational pow4_neg(Index n) { return pow2(-2 * static_cast<std::int64_t>(n)); }

/// Least k with 2^k > x (k >= 0). For x < 1 this is 0.
Index least_power_above(const Rational& x);

/// Least k with 2^{-k} < x; requires x > 0.
Index least_inverse_power_below(const Rational& x);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace ncreal

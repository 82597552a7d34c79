// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "ncreal/rational.hpp"

namespace ncreal {

/// Cantor pairing <i,j> = (i+j)(i+j+1)/2 + i. Throws std::overflow_error when
/// the result does not fit an Index.
Index pair(Index i, Index j);

/// Inverse of pair: returns (pi1(n), pi2(n)). Integer square root only.
std::pair<Index, Index> unpair(Index n);

/// Surjective numbering of the rationals: with (a,b) = unpair(n),
/// -(a/2)/(b+1) for even a and ((a+1)/2)/(b+1) for odd a.
Rational nu_q(Index n);

/// Some n with nu_q(n) == q (uses denominator - 1 as the second component).
/// Throws std::overflow_error for rationals whose code exceeds Index.
Index nu_q_index(const Rational& q);

/// Integer square root of a 128-bit value.
unsigned __int128 isqrt(unsigned __int128 n);

/// An open rational interval coded by a natural number:
/// center nu_q(pi1(code)), radius 2^{-pi2(code)}.
class BallCode {
 public:
  BallCode() = default;
  explicit BallCode(Index code) : code_(code) {}

  /// Code of the ball with the given center and radius 2^{-radius_exponent}.
  static BallCode from_parts(const Rational& center, Index radius_exponent);

  Index code() const { return code_; }
  Rational center() const { return nu_q(unpair(code_).first); }
  Index radius_exponent() const { return unpair(code_).second; }
  Rational radius() const { return tolerance(radius_exponent()); }

  friend bool operator==(const BallCode&, const BallCode&) = default;

 private:
  Index code_ = 0;
};

struct Ball {
  Rational center;
  Rational radius;
};

Ball ball(Index code);

}  // namespace ncreal

// SPDX-License-Identifier: Apache-2.0

#include "ncreal/numbering.hpp"

#include <limits>
#include <stdexcept>

namespace ncreal {

namespace {

using u128 = unsigned __int128;

constexpr u128 kIndexMax = std::numeric_limits<Index>::max();

}  // namespace

u128 isqrt(u128 n) {
  if (n < 2) return n;
  // Newton iteration from an overestimate; stays integral throughout.
  u128 x = n;
  u128 y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

Index pair(Index i, Index j) {
  const u128 w = static_cast<u128>(i) + j;
  const u128 value = w * (w + 1) / 2 + i;
  if (value > kIndexMax) throw std::overflow_error("pair(i, j) overflows the index type");
  return static_cast<Index>(value);
}

std::pair<Index, Index> unpair(Index n) {
  const u128 w = (isqrt(static_cast<u128>(n) * 8 + 1) - 1) / 2;
  const u128 t = w * (w + 1) / 2;
  const auto i = static_cast<Index>(n - t);
  const auto j = static_cast<Index>(w - i);
  return {i, j};
}

Rational nu_q(Index n) {
  const auto [a, b] = unpair(n);
  const Integer den = to_integer(b) + 1;
  if (a % 2 == 0) return Rational(-to_integer(a / 2), den);
  return Rational(to_integer(a / 2 + 1), den);
}

Index nu_q_index(const Rational& q) {
  const Index b = to_index(q.denominator() - 1);
  const Integer p = q.numerator();
  // odd a encodes p > 0 as (a+1)/2 = p; even a encodes -(a/2) = p <= 0.
  const Index a = p > 0 ? to_index(2 * p - 1) : to_index(-2 * p);
  return pair(a, b);
}

BallCode BallCode::from_parts(const Rational& center, Index radius_exponent) {
  return BallCode(pair(nu_q_index(center), radius_exponent));
}

Ball ball(Index code) {
  const BallCode c(code);
  return {c.center(), c.radius()};
}

}  // namespace ncreal

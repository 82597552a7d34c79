// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncreal/sequence.hpp"

namespace ncreal {

ModulusedReal creal_neg(const ModulusedReal& x);

/// Pointwise sum with modulus sum_modulus(gx, gy).
ModulusedReal creal_add(const ModulusedReal& x, const ModulusedReal& y);

/// Least k with 2^k > |x| + 1, read from a precision-1 refinement:
/// 2^k > |approx(1)| + 3/2.
Index magnitude_exponent(const ModulusedReal& x);

/// Pointwise product. With k = max of both magnitude exponents, the modulus
/// is h(n) = max{gx(n+k+1), gy(n+k+1)}.
ModulusedReal creal_mul(const ModulusedReal& x, const ModulusedReal& y);

/// The k used by creal_inv: the least k with 2^(1-k) <= |approx(j)| - 2^-j at
/// the first precision j <= budget where that lower bound is positive, so
/// |x| >= 2^(1-k). Throws ZeroWitnessNotFound.
Index inverse_exponent(const ModulusedReal& x, Index budget = kDefaultRefinementBudget);

/// Pointwise reciprocal (0 where an early approximant vanishes) with modulus
/// h(n) = g(n + 2k), k = inverse_exponent(x).
ModulusedReal creal_inv(const ModulusedReal& x, Index budget = kDefaultRefinementBudget);

/// b_0 + b_1 x + ... + b_k x^k.
struct Polynomial {
  std::vector<ModulusedReal> coefficients;

  static Polynomial from_rationals(const std::vector<Rational>& coefficients);

  /// Index of the highest coefficient; the empty polynomial is rejected.
  Index degree() const;
};

/// Horner evaluation through creal_add and creal_mul.
ModulusedReal poly_eval(const Polynomial& p, const ModulusedReal& x);

/// p'(x) = sum i b_i x^(i-1).
Polynomial derivative(const Polynomial& p);

/// +1 or -1 once |approx(j)| > 2^-j for some j <= budget; empty otherwise.
std::optional<int> determine_sign(const ModulusedReal& x, Index budget = kDefaultRefinementBudget);

/// A sign-change bracket: lo < hi and sign_lo != sign_hi (each +1 or -1).
/// Throws PreconditionViolated otherwise.
class SignedInterval {
 public:
  SignedInterval(Rational lo, Rational hi, int sign_lo, int sign_hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  int sign_lo() const { return sign_lo_; }
  int sign_hi() const { return sign_hi_; }

 private:
  Rational lo_;
  Rational hi_;
  int sign_lo_;
  int sign_hi_;
};

/// Bisection on a sign-change bracket of p. Each step tries the midpoint and,
/// if its sign is undecidable within `budget`, the two trisection points.
/// Returns the bracket midpoint once the width is <= 2^-precision. Throws
/// PreconditionViolated if the end signs do not match the bracket, and
/// SignUndecidable if all three trial points fail.
Rational refine_root(const Polynomial& p, const SignedInterval& bracket, Index precision,
                     Index budget = kDefaultRefinementBudget);

/// Every bracket refine_root visits, first to last.
std::vector<std::pair<Rational, Rational>> refine_root_trace(
    const Polynomial& p, const SignedInterval& bracket, Index precision,
    Index budget = kDefaultRefinementBudget);

}  // namespace ncreal

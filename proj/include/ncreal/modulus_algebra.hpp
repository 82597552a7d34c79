// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncreal/sequence.hpp"

namespace ncreal {

/// h(n) = g(n+1). A Cauchy modulus whenever g is a convergence modulus.
Modulus cauchy_from_convergence(const Modulus& g);

/// Prefix maximum: g'(n) = max{g(0), ..., g(n)}. Nondecreasing, >= g.
Modulus monotonize(const Modulus& g);

/// g'(0) = g(0), g'(n+1) = max{g'(n)+1, g(n+1)}. Strictly increasing, >= g.
Modulus strict_monotonize(const Modulus& g);

/// Modulus of x_n + y_n -> 0 from moduli of x_n -> 0 and y_n -> 0:
/// h(n) = max{gx(n+1), gy(n+1)}.
Modulus sum_modulus(const Modulus& gx, const Modulus& gy);

/// Least k with 2^k > |lambda|.
Index scale_exponent(const Rational& lambda);

/// Modulus of lambda * x_n -> 0 from a modulus g of x_n -> 0: h(n) = g(n+k),
/// k = scale_exponent(lambda).
Modulus scale_modulus(const Modulus& g, const Rational& lambda);

/// With f a modulus of |x_n - y_n| -> 0 and g a modulus of
/// |x_r(n+1) - x_r(n)| -> 0, h(n) = max{f(n+2), g(n+2)} is a modulus of
/// |y_r(n+1) - y_r(n)| -> 0.
Modulus close_transfer_modulus(const Modulus& f, const Modulus& g);

/// n -> s(g(n)): a modulus of x_{n+1} - x_n -> 0 for nondecreasing x, given a
/// modulus g of x_s(n+1) - x_s(n) -> 0.
///
/// s must tend to infinity. This is only semi-checked: s must be declared
/// monotone and must exceed `bound` at some argument <= `search_limit`,
/// otherwise UnboundednessUnverified is thrown.
Modulus monotone_step_modulus(const Modulus& s, const Modulus& g,
                              Index bound = kDefaultCheckHorizon,
                              Index search_limit = kDefaultSearchHorizon);

/// Convergence modulus of the nondecreasing rows of `a` towards alpha, given b
/// with |b_n - alpha| <= 2^-(n+2). g(n) is the least m > g(n-1) (m >= 0 for
/// n = 0) with |a<m, m+2> - b_m| <= 2^-(n+2).
///
/// Throws HorizonExceeded once a candidate m exceeds `horizon`.
Modulus modulus_from_limit(const RealSequenceGrid& a, const Sequence& b,
                           Index horizon = kDefaultSearchHorizon);

}  // namespace ncreal

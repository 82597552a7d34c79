// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncreal/sequence.hpp"

namespace ncreal {

// Every check here runs on a finite window. An empty result means "no
// falsification at horizon H", never that the modulus is valid.

/// A cell (m, n) with m >= g(n) where the observed difference exceeds 2^-n.
struct Violation {
  Index m;
  Index n;
  Rational observed;
  Rational bound;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Line format "m n observed bound".
std::ostream& operator<<(std::ostream& os, const Violation& v);

/// Every (m, n) with n <= horizon and g(n) <= m <= horizon where
/// |x_r(m+1) - x_r(m)| > 2^-n. Evaluates x up to x_r(horizon+1). For a
/// declared-monotone g, the scan stops at the first n with g(n) > horizon.
std::vector<Violation> check_modulus(const Sequence& x, const Probe& r, const Modulus& g,
                                     Index horizon = kDefaultCheckHorizon);

/// Cauchy-modulus check on x_0..x_horizon: for each n with g(n) <= horizon,
/// the spread max - min of x over [g(n), horizon] must be <= 2^-n. A
/// violation records the later index of the extreme pair as m.
std::vector<Violation> check_cauchy_modulus(const Sequence& x, const Modulus& g,
                                            Index horizon = kDefaultCheckHorizon);

/// The ModulusedReal invariant on the window.
std::vector<Violation> check_real(const ModulusedReal& x, Index horizon = kDefaultCheckHorizon);

/// Convergence to a known limit: |x_m - limit| <= 2^-n for g(n) <= m <= horizon.
std::vector<Violation> check_limit_modulus(const Sequence& x, const Rational& limit,
                                           const Modulus& g,
                                           Index horizon = kDefaultCheckHorizon);

/// Pointwise least nondecreasing modulus valid on the window: entries[n] is the
/// least M with |x_r(m+1) - x_r(m)| <= 2^-n for all M <= m <= horizon.
struct ModulusTable {
  Index horizon;
  std::vector<Index> entries;
};

ModulusTable brute_min_modulus(const Sequence& x, const Probe& r,
                               Index horizon = kDefaultCheckHorizon);

struct NamedProbe {
  std::string name;
  Probe probe;
};

/// identity, double (2n), square (n^2), triangular (n(n+1)/2).
std::vector<NamedProbe> probe_suite();

/// Some k < l <= horizon with |x_k - x_l| > 2^-epsilon_exponent.
std::optional<std::pair<Index, Index>> falsify_cauchy(const Sequence& x, Index epsilon_exponent,
                                                      Index horizon);

}  // namespace ncreal

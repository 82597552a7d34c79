// SPDX-License-Identifier: Apache-2.0

#include "ncreal/modulus_algebra.hpp"

#include <algorithm>
#include <string>

#include "ncreal/errors.hpp"

namespace ncreal {

Modulus cauchy_from_convergence(const Modulus& g) {
  return Modulus([g](Index n) { return g(n + 1); },
                 g.declared_monotone() ? Monotonicity::nondecreasing : Monotonicity::unknown);
}

Modulus monotonize(const Modulus& g) {
  detail::Recurrence<Index> prefix_max([g](Index n, const std::vector<Index>& prev) {
    return n == 0 ? g(0) : std::max(prev.back(), g(n));
  });
  return Modulus([prefix_max](Index n) { return prefix_max(n); }, Monotonicity::nondecreasing);
}

Modulus strict_monotonize(const Modulus& g) {
  detail::Recurrence<Index> lifted([g](Index n, const std::vector<Index>& prev) {
    return n == 0 ? g(0) : std::max(prev.back() + 1, g(n));
  });
  return Modulus([lifted](Index n) { return lifted(n); }, Monotonicity::nondecreasing);
}

Modulus sum_modulus(const Modulus& gx, const Modulus& gy) {
  const bool monotone = gx.declared_monotone() && gy.declared_monotone();
  return Modulus([gx, gy](Index n) { return std::max(gx(n + 1), gy(n + 1)); },
                 monotone ? Monotonicity::nondecreasing : Monotonicity::unknown);
}

Index scale_exponent(const Rational& lambda) { return least_power_above(lambda.abs()); }

Modulus scale_modulus(const Modulus& g, const Rational& lambda) {
  const Index k = scale_exponent(lambda);
  return Modulus([g, k](Index n) { return g(n + k); },
                 g.declared_monotone() ? Monotonicity::nondecreasing : Monotonicity::unknown);
}

Modulus close_transfer_modulus(const Modulus& f, const Modulus& g) {
  const bool monotone = f.declared_monotone() && g.declared_monotone();
  return Modulus([f, g](Index n) { return std::max(f(n + 2), g(n + 2)); },
                 monotone ? Monotonicity::nondecreasing : Monotonicity::unknown);
}

Modulus monotone_step_modulus(const Modulus& s, const Modulus& g, Index bound,
                              Index search_limit) {
  if (!s.declared_monotone()) {
    throw UnboundednessUnverified("step map is not declared monotone");
  }
  // Doubling scan; monotonicity makes the last sample the best witness.
  bool exceeded = false;
  for (Index i = 0;; i = i == 0 ? 1 : std::min(2 * i, search_limit)) {
    if (s(i) > bound) {
      exceeded = true;
      break;
    }
    if (i == search_limit) break;
  }
  if (!exceeded) {
    throw UnboundednessUnverified("step map stays <= " + std::to_string(bound) +
                                  " up to argument " + std::to_string(search_limit));
  }
  return Modulus([s, g](Index n) { return s(g(n)); },
                 g.declared_monotone() ? Monotonicity::nondecreasing : Monotonicity::unknown);
}

Modulus modulus_from_limit(const RealSequenceGrid& a, const Sequence& b, Index horizon) {
  detail::Recurrence<Index> g([a, b, horizon](Index n, const std::vector<Index>& prev) {
    const Rational tol = tolerance(n + 2);
    for (Index m = prev.empty() ? 0 : prev.back() + 1; m <= horizon; ++m) {
      if ((a.at(m, m + 2) - b(m)).abs() <= tol) return m;
    }
    throw HorizonExceeded("modulus_from_limit search", horizon);
  });
  return Modulus([g](Index n) { return g(n); }, Monotonicity::nondecreasing);
}

}  // namespace ncreal

// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "ncreal/extraction.hpp"
#include "ncreal/numbering.hpp"
#include "ncreal/rational.hpp"
#include "ncreal/sequence.hpp"

namespace ncreal::testing {

inline Rational half_power(Index n) { return tolerance(n); }

/// n -> 2^-n.
inline Sequence dyadic_decay() {
  return Sequence([](Index n) { return tolerance(n); });
}

inline Sequence naturals() {
  return Sequence([](Index n) { return Rational(n); });
}

inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

/// Closed-form strictly increasing unbounded sequence
/// c0 + c1 n + c2 n^2 + c3 n/(n+1) with c1 >= 1/2 and c2, c3 >= 0, so it can be
/// evaluated at the large indices that square and triangular probes reach.
struct ClosedFormIncreasing {
  Rational c0, c1, c2, c3;

  Rational operator()(Index n) const {
    const Rational x(n);
    return c0 + c1 * x + c2 * x * x + c3 * x / (x + 1);
  }

  static ClosedFormIncreasing random(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> small(0, 6);
    std::uniform_int_distribution<long> den(1, 7);
    ClosedFormIncreasing f;
    f.c0 = Rational(Integer(small(rng) - 3), Integer(den(rng)));
    f.c1 = Rational(1, 2) + Rational(Integer(small(rng)), Integer(den(rng)));
    f.c2 = small(rng) < 2 ? Rational(Integer(1), Integer(den(rng) * 8)) : Rational(0);
    f.c3 = Rational(Integer(small(rng)), Integer(den(rng)));
    return f;
  }
};

/// Straight-line re-implementation of the compression recursion, computed
/// index by index from b_j = b_{j-1} + (a_j - a_{j-1}) * factor. Used only as
/// an oracle for small windows.
struct EagerCompression {
  std::vector<Rational> b;       // b_0..b_last
  std::vector<Index> g;          // g(0), g(1), ... as far as the window needs

  EagerCompression(const std::function<Rational(Index)>& a, Index threshold,
                   const std::function<Index(Index)>& s, Index last) {
    Index g0 = 0;
    while (a(s(g0)) < Rational(threshold)) ++g0;
    g.push_back(g0);
    for (Index j = 0; j <= last && j <= s(g0); ++j) b.push_back(a(j));
    Index block = 0;
    Rational block_sum;
    for (Index i = g0; b.size() <= last; ++i) {
      const Rational gap = a(s(i + 1)) - a(s(i));
      const Rational cap = tolerance(block);
      for (Index j = s(i) + 1; j <= s(i + 1) && b.size() <= last; ++j) {
        const Rational step = a(j) - a(j - 1);
        b.push_back(b.back() + (gap <= cap ? step : step * cap / gap));
      }
      block_sum += gap <= cap ? gap : cap;
      if (block_sum >= 1) {
        g.push_back(i + 1);
        ++block;
        block_sum = Rational(0);
      }
    }
  }
};

/// Converges to c with approximants c + (-1)^m u 2^-(m+1), |u| <= 1; the
/// identity is a Cauchy modulus.
inline ModulusedReal wobbling(const Rational& c, const Rational& u) {
  return ModulusedReal(Sequence([c, u](Index m) {
                         const Rational w = u * tolerance(m + 1);
                         return m % 2 == 0 ? c + w : c - w;
                       }),
                       Modulus::identity());
}

/// y = p/64 + sqrt(2) 2^-20: irrational, with an exact order test.
struct Plant {
  Rational base;

  bool above(const Rational& x) const {
    const Rational d = (x - base) * pow2(20);
    return d.sign() < 0 || d * d < Rational(2);
  }

  /// Approximants from below within 2^-(k+20).
  Sequence from_below() const {
    const Sequence root = ModulusedReal::sqrt(Rational(2)).approximant();
    const Rational b = base;
    return Sequence([root, b](Index k) { return b + root(k) * tolerance(20); });
  }

  /// Approximants alternating around y within 2^-(k+21) + 2^-(k+22).
  Sequence alternating() const {
    const Sequence root = ModulusedReal::sqrt(Rational(2)).approximant();
    const Rational b = base;
    return Sequence([root, b](Index k) {
      const Rational wiggle = tolerance(k + 22);
      return b + root(k + 1) * tolerance(20) + (k % 2 == 0 ? wiggle : -wiggle);
    });
  }

  /// Level j contributes radius 2^-(j+3) balls centered at i 2^-(j+1) in
  /// [0, 1], keeping only those whose closed ball stays 2^-(j+3) away from y.
  BallStream balls() const {
    std::vector<BallCode> codes;
    for (Index j = 0; j <= 12; ++j) {
      const Rational radius = tolerance(j + 3);
      for (Index i = 0; i <= (Index{1} << (j + 1)); ++i) {
        const Rational center = Rational(i) * tolerance(j + 1);
        const bool clear_left = above(center + 2 * radius);
        const bool clear_right = !above(center - 2 * radius);
        if (clear_left || clear_right) codes.push_back(BallCode::from_parts(center, j + 3));
      }
    }
    return [codes](Index n) { return codes.at(n); };
  }
};

inline std::set<Index> random_subset(std::mt19937_64& rng, Index max_element, bool nonempty) {
  std::set<Index> out;
  std::bernoulli_distribution coin(0.35);
  for (Index n = 0; n <= max_element; ++n) {
    if (coin(rng)) out.insert(n);
  }
  if (nonempty && out.empty()) {
    out.insert(std::uniform_int_distribution<Index>(0, max_element)(rng));
  }
  return out;
}

}  // namespace ncreal::testing

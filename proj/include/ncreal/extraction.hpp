// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ncreal/sequence.hpp"

namespace ncreal {

/// sum_{n in elements} 4^-n.
Rational quaternary_value(const std::set<Index>& elements);

struct QuaternarySupport {
  std::set<Index> elements;
  Rational value;
};

/// The unique B within {0..m} with |4^-B - y| < 4^-m / 2, if any. Distinct
/// subsets of {0..m} are at least 4^-m apart, so at most one qualifies.
std::optional<QuaternarySupport> nearest_support(const Rational& y, Index m);

/// Recovers finite supports from a sequence converging to 4^-A.
///
/// r(0) is the least k, and r(n) the least k > r(n-1), such that a_k lies
/// within 4^-n / 2 of some 4^-B with B in {0..n}. Copies share one cache.
class SupportExtractor {
 public:
  explicit SupportExtractor(Sequence a, Index horizon = kDefaultSearchHorizon);

  /// r as a probe; throws HorizonExceeded from its searches.
  const Probe& witness_probe() const { return r_; }
  Index witness(Index n) const { return r_(n); }

  /// B_m, the support read off a_r(m).
  QuaternarySupport support(Index m) const;

 private:
  Sequence a_;
  Probe r_;
};

/// Whether n belongs to A, for a converging to 4^-A. With g' =
/// strict_monotonize(g) and m = g'(2n+3), reads the bit from B_m. Before use,
/// g' is checked as a modulus of a_r(k+1) - a_r(k) -> 0 on the window
/// [0, m]; a falsified g throws ModulusRejected.
bool decode_quaternary(const Sequence& a, const Modulus& g, Index n,
                       Index horizon = kDefaultSearchHorizon);

/// Least T with 4^-T / 3 <= 2^-(precision+1): the tail cut of the indicator sum.
Index indicator_cutoff(Index precision);

/// A rational within 2^-precision of sum_{n : nu_q(n) < x} 4^-n. Each
/// comparison nu_q(n) < x is decided by refining x; the working precision only
/// grows across indices. Throws TieUndecidable(n) when no precision up to
/// `budget` separates nu_q(n) from x.
Rational embed_indicator_sum(const ModulusedReal& x, Index precision,
                             Index budget = kDefaultRefinementBudget);

enum class Side { left, right };

const char* side_name(Side side);

struct LabeledBall {
  BallCode ball;
  Side side;
  Index witness_index;
};

using BallStream = std::function<BallCode(Index)>;

/// r(n) = max{n+1, g(pi2(f(n)))}; the closed ball f(n) lies left of
/// z_r(n) (Side::left) or right of it. Throws WitnessInsideBall when
/// |z_r(n) - center| <= radius.
LabeledBall label_ball(const Sequence& z, const Modulus& g, const BallStream& f, Index n);

struct LocateStep {
  Index ball;
  Side side;
  /// Bracket after this ball; absent bounds have not been seen yet.
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

struct LocateTrace {
  Rational result;
  std::vector<LocateStep> steps;
};

/// Scans the balls f(0), f(1), ..., keeping L = max(center + radius) over
/// left-labeled balls and U = min(center - radius) over right-labeled ones,
/// and returns (L + U) / 2 once U - L <= 2^-precision. Throws HorizonExceeded
/// when `budget` balls do not close the gap.
Rational locate(const Sequence& z, const Modulus& g, const BallStream& f, Index precision,
                Index budget = kDefaultSearchHorizon);

/// locate, recording the bracket after every ball.
LocateTrace locate_traced(const Sequence& z, const Modulus& g, const BallStream& f,
                          Index precision, Index budget = kDefaultSearchHorizon);

}  // namespace ncreal

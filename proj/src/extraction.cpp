// SPDX-License-Identifier: Apache-2.0

#include "ncreal/extraction.hpp"

#include <algorithm>
#include <string>

#include "ncreal/errors.hpp"
#include "ncreal/harness.hpp"
#include "ncreal/modulus_algebra.hpp"

namespace ncreal {

Rational quaternary_value(const std::set<Index>& elements) {
  Rational sum;
  for (Index n : elements) sum += pow4_neg(n);
  return sum;
}

std::optional<QuaternarySupport> nearest_support(const Rational& y, Index m) {
  // 4^m * 4^-B is the integer whose base-4 digit at position m - n is [n in B].
  const Rational scaled = y * pow4_neg(m).reciprocal();
  const Integer z = (scaled + Rational(1, 2)).floor();
  if (z < 0 || !((scaled - Rational(z)).abs() < Rational(1, 2))) return std::nullopt;
  const std::string digits = z.get_str(4);
  if (digits.size() > m + 1) return std::nullopt;
  QuaternarySupport support;
  // Most significant digit first: digits[0] sits at position size-1.
  for (std::size_t idx = 0; idx < digits.size(); ++idx) {
    const Index n = m - (digits.size() - 1 - idx);
    if (digits[idx] == '1') {
      support.elements.insert(n);
    } else if (digits[idx] != '0') {
      return std::nullopt;
    }
  }
  support.value = Rational(z) * pow4_neg(m);
  return support;
}

namespace {

Probe witness_probe_for(const Sequence& a, Index horizon) {
  detail::Recurrence<Index> r([a, horizon](Index n, const std::vector<Index>& prev) {
    for (Index k = prev.empty() ? 0 : prev.back() + 1; k <= horizon; ++k) {
      if (nearest_support(a(k), n)) return k;
    }
    throw HorizonExceeded("support witness search", horizon);
  });
  return Probe([r](Index n) { return r(n); });
}

}  // namespace

SupportExtractor::SupportExtractor(Sequence a, Index horizon)
    : a_(std::move(a)), r_(witness_probe_for(a_, horizon)) {}

QuaternarySupport SupportExtractor::support(Index m) const {
  // r(m) was chosen because this lookup succeeds.
  return *nearest_support(a_(r_(m)), m);
}

bool decode_quaternary(const Sequence& a, const Modulus& g, Index n, Index horizon) {
  const SupportExtractor extractor(a, horizon);
  const Modulus lifted = strict_monotonize(g);
  const Index m = lifted(2 * n + 3);
  const auto violations = check_modulus(a, extractor.witness_probe(), lifted, m);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    throw ModulusRejected("increment at m=" + std::to_string(v.m) + " is " + v.observed.str() +
                          " > 2^-" + std::to_string(v.n));
  }
  return extractor.support(m).elements.count(n) > 0;
}

Index indicator_cutoff(Index precision) {
  const Rational target = pow2(static_cast<std::int64_t>(precision) + 1);
  Index t = 0;
  while (3 * pow2(2 * static_cast<std::int64_t>(t)) < target) ++t;
  return t;
}

Rational embed_indicator_sum(const ModulusedReal& x, Index precision, Index budget) {
  const Index cutoff = indicator_cutoff(precision);
  Rational sum;
  Index j = 0;
  for (Index n = 0; n <= cutoff; ++n) {
    const Rational q = nu_q(n);
    for (;; ++j) {
      if (j > budget) throw TieUndecidable(n);
      const Rational center = x.approx(j);
      const Rational radius = tolerance(j);
      if (q < center - radius) {
        sum += pow4_neg(n);
        break;
      }
      if (q > center + radius) break;
    }
  }
  return sum;
}

const char* side_name(Side side) { return side == Side::left ? "left" : "right"; }

LabeledBall label_ball(const Sequence& z, const Modulus& g, const BallStream& f, Index n) {
  const BallCode code = f(n);
  const Index r = std::max(n + 1, g(code.radius_exponent()));
  const Rational offset = z(r) - code.center();
  if (offset.abs() <= code.radius()) throw WitnessInsideBall(n);
  return {code, offset.sign() > 0 ? Side::left : Side::right, r};
}

LocateTrace locate_traced(const Sequence& z, const Modulus& g, const BallStream& f,
                          Index precision, Index budget) {
  LocateTrace trace;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  const Rational width = tolerance(precision);
  for (Index n = 0; n < budget; ++n) {
    const LabeledBall labeled = label_ball(z, g, f, n);
    const Rational center = labeled.ball.center();
    const Rational radius = labeled.ball.radius();
    if (labeled.side == Side::left) {
      const Rational edge = center + radius;
      if (!lower || *lower < edge) lower = edge;
    } else {
      const Rational edge = center - radius;
      if (!upper || edge < *upper) upper = edge;
    }
    trace.steps.push_back({n, labeled.side, lower, upper});
    if (lower && upper && *upper - *lower <= width) {
      trace.result = (*lower + *upper) / 2;
      return trace;
    }
  }
  throw HorizonExceeded("locate ball scan", budget);
}

Rational locate(const Sequence& z, const Modulus& g, const BallStream& f, Index precision,
                Index budget) {
  return locate_traced(z, g, f, precision, budget).result;
}

}  // namespace ncreal

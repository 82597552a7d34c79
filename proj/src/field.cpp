// SPDX-License-Identifier: Apache-2.0

#include "ncreal/field.hpp"

#include <algorithm>
#include <array>

#include "ncreal/errors.hpp"
#include "ncreal/modulus_algebra.hpp"

namespace ncreal {

namespace {

Monotonicity joint(const Modulus& f, const Modulus& g) {
  return f.declared_monotone() && g.declared_monotone() ? Monotonicity::nondecreasing
                                                        : Monotonicity::unknown;
}

}  // namespace

ModulusedReal creal_neg(const ModulusedReal& x) {
  const Sequence a = x.approximant();
  return ModulusedReal(Sequence([a](Index m) { return -a(m); }), x.modulus());
}

ModulusedReal creal_add(const ModulusedReal& x, const ModulusedReal& y) {
  const Sequence a = x.approximant();
  const Sequence b = y.approximant();
  return ModulusedReal(Sequence([a, b](Index m) { return a(m) + b(m); }),
                       sum_modulus(x.modulus(), y.modulus()));
}

Index magnitude_exponent(const ModulusedReal& x) {
  return least_power_above(x.approx(1).abs() + Rational(3, 2));
}

ModulusedReal creal_mul(const ModulusedReal& x, const ModulusedReal& y) {
  const Index k = std::max(magnitude_exponent(x), magnitude_exponent(y));
  const Sequence a = x.approximant();
  const Sequence b = y.approximant();
  const Modulus gx = x.modulus();
  const Modulus gy = y.modulus();
  return ModulusedReal(
      Sequence([a, b](Index m) { return a(m) * b(m); }),
      Modulus([gx, gy, k](Index n) { return std::max(gx(n + k + 1), gy(n + k + 1)); },
              joint(gx, gy)));
}

Index inverse_exponent(const ModulusedReal& x, Index budget) {
  for (Index j = 0; j <= budget; ++j) {
    const Rational lower = x.approx(j).abs() - tolerance(j);
    if (lower.sign() > 0) {
      Index k = 0;
      while (pow2(1 - static_cast<std::int64_t>(k)) > lower) ++k;
      return k;
    }
  }
  throw ZeroWitnessNotFound(static_cast<unsigned>(budget));
}

ModulusedReal creal_inv(const ModulusedReal& x, Index budget) {
  const Index k = inverse_exponent(x, budget);
  const Sequence a = x.approximant();
  const Modulus g = x.modulus();
  return ModulusedReal(
      Sequence([a](Index m) {
        const Rational v = a(m);
        return v.is_zero() ? v : v.reciprocal();
      }),
      Modulus([g, k](Index n) { return g(n + 2 * k); },
              g.declared_monotone() ? Monotonicity::nondecreasing : Monotonicity::unknown));
}

Polynomial Polynomial::from_rationals(const std::vector<Rational>& coefficients) {
  Polynomial p;
  for (const Rational& c : coefficients) p.coefficients.push_back(ModulusedReal::exact(c));
  return p;
}

Index Polynomial::degree() const {
  if (coefficients.empty()) throw PreconditionViolated("polynomial without coefficients");
  return coefficients.size() - 1;
}

ModulusedReal poly_eval(const Polynomial& p, const ModulusedReal& x) {
  Index i = p.degree();
  ModulusedReal acc = p.coefficients[i];
  while (i-- > 0) acc = creal_add(creal_mul(acc, x), p.coefficients[i]);
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  const Index k = p.degree();
  if (k == 0) return Polynomial::from_rationals({Rational(0)});
  Polynomial d;
  for (Index i = 1; i <= k; ++i) {
    d.coefficients.push_back(creal_mul(ModulusedReal::exact(Rational(i)), p.coefficients[i]));
  }
  return d;
}

std::optional<int> determine_sign(const ModulusedReal& x, Index budget) {
  for (Index j = 0; j <= budget; ++j) {
    const Rational a = x.approx(j);
    const Rational tol = tolerance(j);
    if (a > tol) return 1;
    if (a < -tol) return -1;
  }
  return std::nullopt;
}

SignedInterval::SignedInterval(Rational lo, Rational hi, int sign_lo, int sign_hi)
    : lo_(std::move(lo)), hi_(std::move(hi)), sign_lo_(sign_lo), sign_hi_(sign_hi) {
  if (!(lo_ < hi_)) throw PreconditionViolated("bracket needs lo < hi");
  const auto unit = [](int s) { return s == 1 || s == -1; };
  if (!unit(sign_lo_) || !unit(sign_hi_) || sign_lo_ == sign_hi_) {
    throw PreconditionViolated("bracket needs opposite end signs");
  }
}

std::vector<std::pair<Rational, Rational>> refine_root_trace(const Polynomial& p,
                                                             const SignedInterval& bracket,
                                                             Index precision, Index budget) {
  const auto sign_at = [&](const Rational& t) {
    return determine_sign(poly_eval(p, ModulusedReal::exact(t)), budget);
  };
  for (const auto& [end, expected] :
       {std::pair{bracket.lo(), bracket.sign_lo()}, std::pair{bracket.hi(), bracket.sign_hi()}}) {
    const std::optional<int> s = sign_at(end);
    if (!s) throw SignUndecidable("bracket end " + end.str());
    if (*s != expected) {
      throw PreconditionViolated("polynomial sign at " + end.str() + " contradicts the bracket");
    }
  }

  Rational lo = bracket.lo();
  Rational hi = bracket.hi();
  std::vector<std::pair<Rational, Rational>> trace{{lo, hi}};
  const Rational width = tolerance(precision);
  while (hi - lo > width) {
    const Rational w = hi - lo;
    const std::array<Rational, 3> trials{lo + w / 2, lo + w / 3, lo + 2 * w / 3};
    bool moved = false;
    for (const Rational& t : trials) {
      const std::optional<int> s = sign_at(t);
      if (!s) continue;
      (*s == bracket.sign_lo() ? lo : hi) = t;
      moved = true;
      break;
    }
    if (!moved) throw SignUndecidable("no trial point in [" + lo.str() + ", " + hi.str() + "]");
    trace.emplace_back(lo, hi);
  }
  return trace;
}

Rational refine_root(const Polynomial& p, const SignedInterval& bracket, Index precision,
                     Index budget) {
  const auto last = refine_root_trace(p, bracket, precision, budget).back();
  return (last.first + last.second) / 2;
}

}  // namespace ncreal

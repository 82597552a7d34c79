// SPDX-License-Identifier: Apache-2.0

#include "ncreal/sequence.hpp"

#include <stdexcept>

namespace ncreal {

Sequence Sequence::constant(Rational value) {
  return Sequence::uncached([value = std::move(value)](Index) { return value; });
}

Modulus Modulus::identity() {
  return Modulus([](Index n) { return n; }, Monotonicity::nondecreasing);
}

Modulus Modulus::constant(Index value) {
  return Modulus([value](Index) { return value; }, Monotonicity::nondecreasing);
}

Modulus Modulus::shifted(Index k) {
  return Modulus([k](Index n) { return n + k; }, Monotonicity::nondecreasing);
}

Modulus Modulus::affine(Index a, Index b) {
  return Modulus([a, b](Index n) { return a * n + b; }, Monotonicity::nondecreasing);
}

Probe Probe::identity() {
  return Probe([](Index n) { return n; });
}

ModulusedReal ModulusedReal::exact(const Rational& c) {
  return ModulusedReal(Sequence::constant(c), Modulus::constant(0));
}

ModulusedReal ModulusedReal::sqrt(const Rational& c) {
  if (c.sign() < 0) throw std::domain_error("sqrt of a negative rational");
  // s = floor(sqrt(floor(c 4^n))) satisfies s <= sqrt(c) 2^n < s + 1, so the
  // approximants increase to sqrt(c) with error below 2^-n.
  Sequence approximant([c](Index n) {
    const Integer scaled = (c * pow4_neg(n).reciprocal()).floor();
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return Rational(root) * tolerance(n);
  });
  return ModulusedReal(std::move(approximant), Modulus::identity());
}

RealSequenceGrid RealSequenceGrid::from_function(std::function<Rational(Index, Index)> f) {
  return RealSequenceGrid(Sequence([f = std::move(f)](Index code) {
    const auto [n, k] = unpair(code);
    return f(n, k);
  }));
}

RealSequenceGrid RealSequenceGrid::from_rationals(Sequence x) {
  return from_function([x = std::move(x)](Index n, Index) { return x(n); });
}

}  // namespace ncreal

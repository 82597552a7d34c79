// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncreal/numbering.hpp"
#include "ncreal/rational.hpp"

namespace ncreal {

namespace detail {

/// Shared, thread-safe, optionally memoized total map Index -> T.
///
/// The generator runs without the memo lock held, so generators may recurse
/// into the same map. Concurrent first evaluations of one index may both run
/// the (pure) generator; the first stored value wins.
template <class T>
class LazyMap {
 public:
  using Generator = std::function<T(Index)>;

  LazyMap(Generator generator, bool memoize)
      : state_(std::make_shared<State>(std::move(generator), memoize)) {}

  T operator()(Index i) const {
    State& s = *state_;
    if (!s.memoize) return s.generator(i);
    {
      std::lock_guard lock(s.mutex);
      if (auto it = s.memo.find(i); it != s.memo.end()) return it->second;
    }
    T value = s.generator(i);
    std::lock_guard lock(s.mutex);
    return s.memo.try_emplace(i, std::move(value)).first->second;
  }

 private:
  struct State {
    State(Generator g, bool m) : generator(std::move(g)), memoize(m) {}
    Generator generator;
    bool memoize;
    std::mutex mutex;
    std::unordered_map<Index, T> memo;
  };

  std::shared_ptr<State> state_;
};

/// Shared map Index -> T defined by a recurrence over all earlier values.
/// Values are computed in order under the state lock, so `step` must not
/// re-enter the same recurrence.
template <class T>
class Recurrence {
 public:
  using Step = std::function<T(Index, const std::vector<T>&)>;

  explicit Recurrence(Step step) : state_(std::make_shared<State>(std::move(step))) {}

  T operator()(Index n) const {
    State& s = *state_;
    std::lock_guard lock(s.mutex);
    while (s.values.size() <= n) s.values.push_back(s.step(s.values.size(), s.values));
    return s.values[n];
  }

 private:
  struct State {
    explicit State(Step st) : step(std::move(st)) {}
    Step step;
    std::mutex mutex;
    std::vector<T> values;
  };

  std::shared_ptr<State> state_;
};

}  // namespace detail

/// Default bound for unbounded index searches.
inline constexpr Index kDefaultSearchHorizon = 100000;
/// Default window for finite-horizon modulus checks.
inline constexpr Index kDefaultCheckHorizon = 128;
/// Default cap on refinement precision for sign and tie decisions.
inline constexpr Index kDefaultRefinementBudget = 256;

/// A computable sequence of rationals: a pure total map Index -> Rational.
/// Memoized unless constructed with `uncached` (used by evaluators that keep
/// their own block-level cache).
class Sequence {
 public:
  using Generator = std::function<Rational(Index)>;

  explicit Sequence(Generator generator) : map_(std::move(generator), true) {}

  static Sequence uncached(Generator generator) { return Sequence(std::move(generator), false); }
  static Sequence constant(Rational value);

  Rational operator()(Index n) const { return map_(n); }

 private:
  Sequence(Generator generator, bool memoize) : map_(std::move(generator), memoize) {}

  detail::LazyMap<Rational> map_;
};

enum class Monotonicity { unknown, nondecreasing };

/// A function g: N -> N used as a modulus ("m >= g(n) implies error <= 2^-n").
/// `declared_monotone()` lets finite-horizon checks stop once g exceeds the
/// window; it is the constructor's promise, not something verified here.
class Modulus {
 public:
  using Generator = std::function<Index(Index)>;

  explicit Modulus(Generator generator, Monotonicity monotonicity = Monotonicity::unknown,
                   bool memoize = false)
      : map_(std::move(generator), memoize),
        monotone_(monotonicity == Monotonicity::nondecreasing) {}

  static Modulus identity();
  static Modulus constant(Index value);
  /// n -> n + k
  static Modulus shifted(Index k);
  /// n -> a*n + b
  static Modulus affine(Index a, Index b);

  Index operator()(Index n) const { return map_(n); }
  bool declared_monotone() const { return monotone_; }

 private:
  detail::LazyMap<Index> map_;
  bool monotone_;
};

/// A strictly increasing index map r: N -> N selecting a subsequence.
class Probe {
 public:
  using Generator = std::function<Index(Index)>;

  explicit Probe(Generator generator, bool memoize = false) : map_(std::move(generator), memoize) {}

  static Probe identity();

  Index operator()(Index n) const { return map_(n); }

 private:
  detail::LazyMap<Index> map_;
};

/// A computable real: approximants paired with a Cauchy modulus, so
/// |x_l - x_m| <= 2^-n whenever l, m >= g(n). The value then lies within 2^-n
/// of x_{g(n)}.
class ModulusedReal {
 public:
  ModulusedReal(Sequence approximant, Modulus cauchy_modulus)
      : approximant_(std::move(approximant)), modulus_(std::move(cauchy_modulus)) {}

  /// The exact rational c (constant approximants, modulus 0).
  static ModulusedReal exact(const Rational& c);

  /// sqrt(c) for c >= 0, approximant n -> floor(sqrt(c) 2^n) / 2^n.
  static ModulusedReal sqrt(const Rational& c);

  const Sequence& approximant() const { return approximant_; }
  const Modulus& modulus() const { return modulus_; }

  /// A rational within 2^-n of the value.
  Rational approx(Index n) const { return approximant_(modulus_(n)); }

 private:
  Sequence approximant_;
  Modulus modulus_;
};

/// A computable sequence of reals (x_n): q_<n,k> approximates x_n within 2^-k.
class RealSequenceGrid {
 public:
  explicit RealSequenceGrid(Sequence grid) : grid_(std::move(grid)) {}

  /// Grid from a two-argument generator (n, k) -> q_<n,k>.
  static RealSequenceGrid from_function(std::function<Rational(Index, Index)> f);

  /// The rational sequence x viewed as a real sequence: q_<n,k> = x_n.
  static RealSequenceGrid from_rationals(Sequence x);

  Rational at(Index n, Index k) const { return grid_(pair(n, k)); }
  const Sequence& grid() const { return grid_; }

 private:
  Sequence grid_;
};

}  // namespace ncreal

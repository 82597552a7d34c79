// SPDX-License-Identifier: Apache-2.0

#include "ncreal/subsequence.hpp"

#include <utility>

#include "ncreal/errors.hpp"
#include "ncreal/modulus_algebra.hpp"

namespace ncreal {

namespace {

// Least k >= from with pred(k), or HorizonExceeded once k passes horizon.
template <class Pred>
Index search_from(Index from, Index horizon, const char* what, Pred pred) {
  for (Index k = from; k <= horizon; ++k) {
    if (pred(k)) return k;
  }
  throw HorizonExceeded(what, horizon);
}

}  // namespace

Sequence strictify(const RealSequenceGrid& x) {
  return Sequence([x](Index n) { return x.at(n, n + 3) - 5 * tolerance(n + 3); });
}

Overtaking overtake(const Sequence& a, const Sequence& c, Index horizon) {
  using Step = std::pair<Index, Index>;
  detail::Recurrence<Step> chain([a, c, horizon](Index n, const std::vector<Step>& prev) {
    if (n == 0) {
      const Rational a0 = a(0);
      return Step{0, search_from(0, horizon, "overtake t-search",
                                 [&](Index k) { return c(k) > a0; })};
    }
    const auto [s_prev, t_prev] = prev.back();
    const Rational c_prev = c(t_prev);
    const Index s = search_from(s_prev + 1, horizon, "overtake s-search",
                                [&](Index k) { return a(k) > c_prev; });
    const Rational a_s = a(s);
    const Index t = search_from(t_prev + 1, horizon, "overtake t-search",
                                [&](Index k) { return c(k) > a_s; });
    return Step{s, t};
  });
  return {Probe([chain](Index n) { return chain(n).first; }),
          Probe([chain](Index n) { return chain(n).second; })};
}

Modulus overtake_transfer_modulus(const Modulus& g) { return cauchy_from_convergence(g); }

Probe synchronize(const Sequence& a, const Sequence& b, Index horizon) {
  detail::Recurrence<Index> s([a, b, horizon](Index n, const std::vector<Index>& prev) {
    const Rational tol = tolerance(n);
    return search_from(prev.empty() ? 0 : prev.back() + 1, horizon, "synchronize search",
                       [&](Index k) { return (a(k) - b(k)).abs() <= tol; });
  });
  return Probe([s](Index n) { return s(n); });
}

Probe probe_compose(const Probe& s, const Probe& r) {
  return Probe([s, r](Index n) { return s(r(n)); });
}

Sequence difference_sequence(const Sequence& x, const Probe& r) {
  return Sequence([x, r](Index n) { return x(r(n + 1)) - x(r(n)); });
}

}  // namespace ncreal

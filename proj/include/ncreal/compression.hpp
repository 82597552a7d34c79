// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ncreal/sequence.hpp"

namespace ncreal {

struct CompressionResult {
  /// The compressed sequence b.
  Sequence compressed;
  /// Block boundaries g: g(n) is the first probe index of block n. Declared
  /// monotone, and a modulus of b_s(m+1) - b_s(m) -> 0.
  Modulus modulus;
  Index threshold;
  Probe probe;
};

/// Squeezes the strictly increasing, unbounded sequence a above the threshold
/// N so that the increments of b along the probe s acquire the modulus g.
///
///   g(0) = least k with a_s(k) >= N, and b_j = a_j for j <= s(g(0)).
///   For i in block n (g(n) <= i < g(n+1)) and s(i) < j <= s(i+1):
///     b_j - b_{j-1} = a_j - a_{j-1}                 if D_i <= 2^-n,
///     b_j - b_{j-1} = (a_j - a_{j-1}) 2^-n / D_i    otherwise,
///   where D_i = a_s(i+1) - a_s(i).
///   g(n+1) = least k > g(n) with sum_{g(n) <= i < k} min{2^-n, D_i} >= 1.
///
/// b and g are evaluated lazily, one probe run at a time, and share a
/// serialized cache; only run starts are stored. Throws HorizonExceeded when a
/// probe index past `horizon` would be needed, PreconditionViolated when some
/// D_i <= 0.
CompressionResult compress(const Sequence& a, Index threshold, const Probe& s,
                           Index horizon = kDefaultSearchHorizon);

struct AntiCauchyResult {
  /// The final stage a^(m).
  Sequence q;
  /// moduli[i] = g of stage i + 1, for probes[i].
  std::vector<Modulus> moduli;
  /// stages[i] = a^(i), for i = 0..m; stages[0] is n -> n.
  std::vector<Sequence> stages;
};

/// Finite diagonal against the given probes: a^(0)_n = n and
/// a^(i+1) = compress(a^(i), i+1, probes[i]).
AntiCauchyResult anti_cauchy(const std::vector<Probe>& probes,
                             Index horizon = kDefaultSearchHorizon);

}  // namespace ncreal

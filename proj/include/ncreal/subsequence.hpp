// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncreal/sequence.hpp"

namespace ncreal {

/// a_n = q<n, n+3> - 5 * 2^-(n+3). For nondecreasing rows x_n this is strictly
/// increasing with 2^-(n+1) <= x_n - a_n <= 3 * 2^-(n+2).
Sequence strictify(const RealSequenceGrid& x);

struct Overtaking {
  Probe s;
  Probe t;
};

/// Interleaving probes for two strictly increasing sequences with a common
/// limit: a_s(n) < c_t(n) < a_s(n+1). s(0) = 0, t(0) = least k with c_k > a_0,
/// and each later value is the least index past its predecessor that overtakes
/// the other side. Throws HorizonExceeded once a search passes `horizon`.
Overtaking overtake(const Sequence& a, const Sequence& c, Index horizon = kDefaultSearchHorizon);

/// h(n) = g(n+1): carries a modulus of a_s(n+1) - a_s(n) -> 0 over to
/// c_t(n+1) - c_t(n) -> 0 for the probes returned by overtake.
Modulus overtake_transfer_modulus(const Modulus& g);

/// s(n) = least k > s(n-1) (k >= 0 for n = 0) with |a_k - b_k| <= 2^-n.
/// Throws HorizonExceeded once a candidate passes `horizon`.
Probe synchronize(const Sequence& a, const Sequence& b, Index horizon = kDefaultSearchHorizon);

/// n -> s(r(n)).
Probe probe_compose(const Probe& s, const Probe& r);

/// d_n = x_r(n+1) - x_r(n).
Sequence difference_sequence(const Sequence& x, const Probe& r);

}  // namespace ncreal

// SPDX-License-Identifier: Apache-2.0

#include "ncreal/harness.hpp"

#include <algorithm>
#include <ostream>

namespace ncreal {

namespace {

std::vector<Rational> probe_increments(const Sequence& x, const Probe& r, Index horizon) {
  std::vector<Rational> d;
  d.reserve(horizon + 1);
  Rational prev = x(r(0));
  for (Index m = 0; m <= horizon; ++m) {
    Rational next = x(r(m + 1));
    d.push_back((next - prev).abs());
    prev = std::move(next);
  }
  return d;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Violation& v) {
  return os << v.m << ' ' << v.n << ' ' << v.observed << ' ' << v.bound;
}

std::vector<Violation> check_modulus(const Sequence& x, const Probe& r, const Modulus& g,
                                     Index horizon) {
  std::vector<Violation> out;
  std::vector<Rational> d;
  for (Index n = 0; n <= horizon; ++n) {
    const Index start = g(n);
    if (start > horizon) {
      if (g.declared_monotone()) break;
      continue;
    }
    if (d.empty()) d = probe_increments(x, r, horizon);
    const Rational bound = tolerance(n);
    for (Index m = start; m <= horizon; ++m) {
      if (d[m] > bound) out.push_back({m, n, d[m], bound});
    }
  }
  return out;
}

std::vector<Violation> check_cauchy_modulus(const Sequence& x, const Modulus& g, Index horizon) {
  std::vector<Violation> out;
  std::vector<Rational> values;
  for (Index n = 0; n <= horizon; ++n) {
    const Index start = g(n);
    if (start > horizon) {
      if (g.declared_monotone()) break;
      continue;
    }
    if (values.empty()) {
      for (Index m = 0; m <= horizon; ++m) values.push_back(x(m));
    }
    Index lo = start;
    Index hi = start;
    for (Index m = start + 1; m <= horizon; ++m) {
      if (values[m] < values[lo]) lo = m;
      if (values[hi] < values[m]) hi = m;
    }
    const Rational spread = values[hi] - values[lo];
    const Rational bound = tolerance(n);
    if (spread > bound) out.push_back({std::max(lo, hi), n, spread, bound});
  }
  return out;
}

std::vector<Violation> check_real(const ModulusedReal& x, Index horizon) {
  return check_cauchy_modulus(x.approximant(), x.modulus(), horizon);
}

std::vector<Violation> check_limit_modulus(const Sequence& x, const Rational& limit,
                                           const Modulus& g, Index horizon) {
  std::vector<Violation> out;
  for (Index n = 0; n <= horizon; ++n) {
    const Index start = g(n);
    if (start > horizon) {
      if (g.declared_monotone()) break;
      continue;
    }
    const Rational bound = tolerance(n);
    for (Index m = start; m <= horizon; ++m) {
      const Rational observed = (x(m) - limit).abs();
      if (observed > bound) out.push_back({m, n, observed, bound});
    }
  }
  return out;
}

ModulusTable brute_min_modulus(const Sequence& x, const Probe& r, Index horizon) {
  const std::vector<Rational> d = probe_increments(x, r, horizon);
  ModulusTable table{horizon, {}};
  table.entries.reserve(horizon + 1);
  for (Index n = 0; n <= horizon; ++n) {
    const Rational bound = tolerance(n);
    Index entry = 0;
    for (Index m = horizon + 1; m-- > 0;) {
      if (d[m] > bound) {
        entry = m + 1;
        break;
      }
    }
    table.entries.push_back(entry);
  }
  return table;
}

std::vector<NamedProbe> probe_suite() {
  return {
      {"identity", Probe::identity()},
      {"double", Probe([](Index n) { return 2 * n; })},
      {"square", Probe([](Index n) { return n * n; })},
      {"triangular", Probe([](Index n) { return n * (n + 1) / 2; })},
  };
}

std::optional<std::pair<Index, Index>> falsify_cauchy(const Sequence& x, Index epsilon_exponent,
                                                      Index horizon) {
  if (horizon == 0) return std::nullopt;
  const Rational bound = tolerance(epsilon_exponent);
  Index lo = 0;
  Index hi = 0;
  Rational lo_value = x(0);
  Rational hi_value = lo_value;
  for (Index l = 1; l <= horizon; ++l) {
    const Rational v = x(l);
    if (v - lo_value > bound) return std::pair{lo, l};
    if (hi_value - v > bound) return std::pair{hi, l};
    if (v < lo_value) {
      lo = l;
      lo_value = v;
    }
    if (hi_value < v) {
      hi = l;
      hi_value = v;
    }
  }
  return std::nullopt;
}

}  // namespace ncreal

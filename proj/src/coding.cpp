// SPDX-License-Identifier: Apache-2.0

#include "ncreal/coding.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "ncreal/errors.hpp"

namespace ncreal {

BitString::BitString(std::string bits) : bits_(std::move(bits)) {
  if (bits_.find_first_not_of("01") != std::string::npos) {
    throw ParseError("not a bit string: '" + bits_ + "'");
  }
}

bool BitString::is_prefix_of(const BitString& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

PrefixCode::PrefixCode() : free_{BitString()} {}

const BitString& PrefixCode::assign(Index length) {
  const Rational weight = tolerance(length);
  if (mass_ + weight > 1) throw KraftOverflow(assignments_.size(), mass_.str());

  // Disjoint cylinders sort left to right, so the first one short enough to
  // hold a word of this length yields the least available word.
  const auto it = std::find_if(free_.begin(), free_.end(),
                               [length](const BitString& c) { return c.size() <= length; });
  if (it == free_.end()) {
    throw std::logic_error("no free cylinder of length <= " + std::to_string(length) +
                           " at Kraft mass " + mass_.str());
  }
  const std::string base = it->str();
  free_.erase(it);
  // Splitting c into c0^(L-|c|) leaves the free siblings c1, c01, c001, ...
  std::string prefix = base;
  while (prefix.size() < length) {
    free_.emplace(prefix + "1");
    prefix.push_back('0');
  }
  mass_ += weight;
  assignments_.emplace_back(std::move(prefix));
  return assignments_.back();
}

std::vector<BitString> kc_assign(const std::vector<Index>& lengths) {
  PrefixCode code;
  for (Index length : lengths) code.assign(length);
  return code.assignments();
}

struct CodeStream::State {
  explicit State(std::function<Index(Index)> l) : lengths(std::move(l)) {}
  std::function<Index(Index)> lengths;
  std::mutex mutex;
  PrefixCode code;
};

CodeStream::CodeStream(std::function<Index(Index)> lengths)
    : state_(std::make_shared<State>(std::move(lengths))) {}

BitString CodeStream::operator()(Index n) const {
  std::lock_guard lock(state_->mutex);
  while (state_->code.assignments().size() <= n) {
    state_->code.assign(state_->lengths(state_->code.assignments().size()));
  }
  return state_->code.assignments()[n];
}

Modulus lengths_from_weights(const Sequence& b) {
  struct Sums {
    Index length;
    Rational dyadic;  // sum_{i<=n} 2^-f(i)
    Rational weight;  // sum_{i<=n} b_i
  };
  detail::Recurrence<Sums> f([b](Index n, const std::vector<Sums>& prev) {
    const Rational bn = b(n);
    if (bn.sign() <= 0) throw WeightNotPositive(n);
    const Rational dyadic = prev.empty() ? Rational(0) : prev.back().dyadic;
    const Rational weight = (prev.empty() ? Rational(0) : prev.back().weight) + bn;
    if (weight > 1) throw MassExceeded(n);
    const Index k = least_inverse_power_below(weight - dyadic);
    return Sums{k, dyadic + tolerance(k), weight};
  });
  return Modulus([f](Index n) { return f(n).length; });
}

bool decide_prefix_member(const BitString& w, const std::function<BitString(Index)>& h,
                          const Modulus& g) {
  const Index window = g(w.size() + 1);
  for (Index i = 0; i < window; ++i) {
    if (h(i) == w) return true;
  }
  return false;
}

bool decide_enumerated_member(Index n, const std::function<Index(Index)>& f, const Modulus& g) {
  const Index window = g(n + 1);
  for (Index i = 0; i < window; ++i) {
    if (f(i) == n) return true;
  }
  return false;
}

}  // namespace ncreal

// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ncreal/sequence.hpp"

namespace ncreal {

/// A finite word over {0,1}.
class BitString {
 public:
  BitString() = default;
  /// Throws ParseError on characters other than '0' and '1'.
  explicit BitString(std::string bits);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  const std::string& str() const { return bits_; }

  /// True when this is a (not necessarily proper) prefix of `other`.
  bool is_prefix_of(const BitString& other) const;

  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::string bits_;
};

/// Two words are compatible when one prefixes the other.
inline bool prefix_comparable(const BitString& u, const BitString& v) {
  return u.is_prefix_of(v) || v.is_prefix_of(u);
}

/// Online Kraft-Chaitin assignment. Each request of length L receives the
/// lexicographically least word of length L that is prefix-incomparable with
/// all earlier words. The free region is held as a set of maximal free
/// cylinders; an assignment only ever splits the leftmost one that fits.
class PrefixCode {
 public:
  PrefixCode();

  /// Throws KraftOverflow (carrying the request number) when mass + 2^-L > 1.
  const BitString& assign(Index length);

  const std::vector<BitString>& assignments() const { return assignments_; }
  const Rational& kraft_mass() const { return mass_; }

 private:
  std::set<BitString> free_;
  std::vector<BitString> assignments_;
  Rational mass_;
};

/// Batch form: assigns the lengths in order.
std::vector<BitString> kc_assign(const std::vector<Index>& lengths);

/// Pull-based form over a length stream: word n is assigned when first
/// requested, after words 0..n-1. Copies share one underlying code.
class CodeStream {
 public:
  explicit CodeStream(std::function<Index(Index)> lengths);

  BitString operator()(Index n) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Code lengths from positive weights with sum <= 1:
///   f(n) = least k with sum_{i<n} 2^-f(i) + 2^-k < sum_{i<=n} b_i.
/// Then 2^-f(n) >= b_n / 2 and the dyadic partial sums stay strictly below the
/// weight partial sums. Evaluated in order; throws WeightNotPositive or
/// MassExceeded at the first offending index.
Modulus lengths_from_weights(const Sequence& b);

/// w in {h(0), ..., h(g(|w|+1) - 1)}.
bool decide_prefix_member(const BitString& w, const std::function<BitString(Index)>& h,
                          const Modulus& g);

/// n in {f(0), ..., f(g(n+1) - 1)}.
bool decide_enumerated_member(Index n, const std::function<Index(Index)>& f, const Modulus& g);

}  // namespace ncreal

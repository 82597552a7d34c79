// SPDX-License-Identifier: Apache-2.0

#include "ncreal/compression.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>

#include "ncreal/errors.hpp"

namespace ncreal {

namespace {

// Run i covers the indices (s(i), s(i+1)]; inside it b is affine in a.
struct Run {
  Index start;
  Rational a_start;
  Rational b_start;
  Rational scale;
};

class CompressionState {
 public:
  CompressionState(Sequence a, Index threshold, Probe s, Index horizon)
      : a_(std::move(a)), threshold_(threshold), s_(std::move(s)), horizon_(horizon) {}

  Rational value(Index j) {
    std::lock_guard lock(mutex_);
    anchor();
    if (j <= anchor_start_) return a_(j);
    while (next_start_ < j) add_run();
    // Last run whose start lies strictly below j.
    const auto it = std::partition_point(runs_.begin(), runs_.end(),
                                         [j](const Run& r) { return r.start < j; });
    const Run& run = *std::prev(it);
    return run.b_start + (a_(j) - run.a_start) * run.scale;
  }

  Index block_start(Index n) {
    std::lock_guard lock(mutex_);
    anchor();
    while (block_starts_.size() <= n) add_run();
    return block_starts_[n];
  }

 private:
  void anchor() {
    if (anchored_) return;
    const Rational bound(threshold_);
    Index k = 0;
    while (a_(s_(k)) < bound) {
      if (++k > horizon_) throw HorizonExceeded("compress threshold search", horizon_);
    }
    block_starts_.push_back(k);
    anchor_start_ = s_(k);
    next_start_ = anchor_start_;
    next_a_ = a_(next_start_);
    next_b_ = next_a_;
    anchored_ = true;
  }

  void add_run() {
    const Index i = block_starts_.front() + runs_.size();
    if (i + 1 > horizon_) throw HorizonExceeded("compress block search", horizon_);
    const Index end = s_(i + 1);
    const Rational a_end = a_(end);
    const Rational gap = a_end - next_a_;
    if (gap.sign() <= 0) {
      throw PreconditionViolated("compress input does not increase along the probe at " +
                                 std::to_string(i));
    }
    const Rational cap = tolerance(block_);
    const bool plain = gap <= cap;
    const Rational increment = plain ? gap : cap;
    runs_.push_back({next_start_, next_a_, next_b_, plain ? Rational(1) : cap / gap});
    next_start_ = end;
    next_a_ = a_end;
    next_b_ += increment;
    block_sum_ += increment;
    if (block_sum_ >= 1) {
      block_starts_.push_back(i + 1);
      ++block_;
      block_sum_ = Rational(0);
    }
  }

  Sequence a_;
  Index threshold_;
  Probe s_;
  Index horizon_;

  std::mutex mutex_;
  bool anchored_ = false;
  Index anchor_start_ = 0;
  std::vector<Index> block_starts_;
  std::vector<Run> runs_;
  Index block_ = 0;
  Rational block_sum_;
  Index next_start_ = 0;
  Rational next_a_;
  Rational next_b_;
};

}  // namespace

CompressionResult compress(const Sequence& a, Index threshold, const Probe& s, Index horizon) {
  auto state = std::make_shared<CompressionState>(a, threshold, s, horizon);
  return {Sequence::uncached([state](Index j) { return state->value(j); }),
          Modulus([state](Index n) { return state->block_start(n); },
                  Monotonicity::nondecreasing),
          threshold, s};
}

AntiCauchyResult anti_cauchy(const std::vector<Probe>& probes, Index horizon) {
  AntiCauchyResult result{Sequence::uncached([](Index n) { return Rational(n); }), {}, {}};
  result.stages.push_back(result.q);
  for (Index i = 0; i < probes.size(); ++i) {
    CompressionResult stage = compress(result.q, i + 1, probes[i], horizon);
    result.q = stage.compressed;
    result.moduli.push_back(stage.modulus);
    result.stages.push_back(stage.compressed);
  }
  return result;
}

}  // namespace ncreal

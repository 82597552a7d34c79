// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncreal {

/// Base of every domain error raised by the library. `name()` is the stable
/// identifier surfaced by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A bounded search ran past its configured index horizon.
class HorizonExceeded : public Error {
 public:
  HorizonExceeded(const std::string& what_search, std::uint64_t horizon)
      : Error("HorizonExceeded",
              what_search + " passed index horizon " + std::to_string(horizon)),
        horizon_(horizon) {}

  std::uint64_t horizon() const noexcept { return horizon_; }

 private:
  std::uint64_t horizon_;
};

class KraftOverflow : public Error {
 public:
  KraftOverflow(std::uint64_t request, const std::string& mass)
      : Error("KraftOverflow", "request " + std::to_string(request) +
                                   " would push Kraft mass " + mass + " above 1"),
        request_(request) {}

  std::uint64_t request() const noexcept { return request_; }

 private:
  std::uint64_t request_;
};

class WeightNotPositive : public Error {
 public:
  explicit WeightNotPositive(std::uint64_t index)
      : Error("WeightNotPositive", "weight " + std::to_string(index) + " is not positive") {}
};

class MassExceeded : public Error {
 public:
  explicit MassExceeded(std::uint64_t index)
      : Error("MassExceeded", "partial weight sum through index " + std::to_string(index) +
                                  " exceeds 1") {}
};

class TieUndecidable : public Error {
 public:
  explicit TieUndecidable(std::uint64_t index)
      : Error("TieUndecidable",
              "cannot separate nu_q(" + std::to_string(index) + ") from the input value"),
        index_(index) {}

  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

class WitnessInsideBall : public Error {
 public:
  explicit WitnessInsideBall(std::uint64_t ball_index)
      : Error("WitnessInsideBall",
              "witness lies inside closed ball #" + std::to_string(ball_index)) {}
};

class ZeroWitnessNotFound : public Error {
 public:
  explicit ZeroWitnessNotFound(unsigned budget)
      : Error("ZeroWitnessNotFound",
              "no refinement up to precision " + std::to_string(budget) + " excludes 0") {}
};

class SignUndecidable : public Error {
 public:
  explicit SignUndecidable(const std::string& where)
      : Error("SignUndecidable", where) {}
};

class UnboundednessUnverified : public Error {
 public:
  explicit UnboundednessUnverified(const std::string& message)
      : Error("UnboundednessUnverified", message) {}
};

/// A caller-supplied modulus was falsified before use.
class ModulusRejected : public Error {
 public:
  explicit ModulusRejected(const std::string& message) : Error("ModulusRejected", message) {}
};

/// An input violated a checkable precondition (e.g. a sequence that should be
/// strictly increasing is not).
class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& message)
      : Error("PreconditionViolated", message) {}
};

/// An input file could not be read.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("InputError", message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

}  // namespace ncreal

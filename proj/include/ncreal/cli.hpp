// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ncreal {

/// A parsed specification term: an atom ("3/4", "identity", "data/x.txt") or a
/// call head(arg, ...). Atoms are maximal runs without '(', ')', ',' or spaces.
struct SpecTerm {
  std::string head;
  std::vector<SpecTerm> args;
  bool call = false;

  /// Throws ParseError.
  static SpecTerm parse(std::string_view text);

  /// Canonical text form; parse(str()) reproduces the term.
  std::string str() const;

  friend bool operator==(const SpecTerm&, const SpecTerm&) = default;
};

/// Runs one command-line invocation (arguments without the program name).
/// Returns 0 on success, 1 on a domain error (message names the error), and 2
/// on a usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncreal

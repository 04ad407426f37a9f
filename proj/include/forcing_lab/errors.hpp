// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace forcing_lab {

/// Invalid graph construction (loop, duplicate edge, endpoint out of range).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or catalog text. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was called outside its domain (non-matchable input, wrong classifier, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured search or enumeration cap was exceeded; the answer is unknown.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace forcing_lab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppers {

/// Raised when a value violates a structural invariant (non-monotone weight,
/// cyclic cover relation, unknown element, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ppers

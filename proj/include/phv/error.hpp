#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phv {

/// Raised for violated preconditions on domain values (bad rank, index out of
/// range, inapplicable move, out-of-range catalog parameter, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the module-expression parser; `position` is a byte offset into
/// the source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace phv

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vmcat {

/// Malformed textual input. `position()` is the 0-based byte offset of the
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The diagnostic without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// An operation invoked outside its mathematical domain (e.g. a row of zero
/// boxes, or quantization at nonzero central charge).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace vmcat

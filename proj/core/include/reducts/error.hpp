#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reducts {

/// Domain error: a precondition of a library operation was violated.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a textual term. `offset()` is the 1-based character
/// position of the offending token within the input.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, std::string message, std::string input);

  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& input() const noexcept { return input_; }

  /// Input line followed by a caret under the offending position.
  std::string excerpt() const;

private:
  std::size_t offset_;
  std::string message_;
  std::string input_;
};

} // namespace reducts

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maa {

/// Malformed textual input: hex strings, corpus records, scenario lines.
/// `line` is 1-based and 0 when the input has no line structure; `column`
/// is the 1-based character position of the offending character, or 0.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::invalid_argument(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised when a message reaches the configured block limit. MAA results
/// are undefined for messages of 1,000,000 blocks or more.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The MAC of an empty message is not defined.
class EmptyMessageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace maa

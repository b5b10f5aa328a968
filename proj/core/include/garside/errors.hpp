#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

/// Bad input: malformed braid text, mismatched strand counts, or a refused
/// precondition. The CLI maps this family to exit status 1.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parse failure with the 0-based character offset of the offending token.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InvalidArgument(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured safety bound was hit (vertex cap, step cap, oracle bound).
/// The CLI maps this family to exit status 2.
class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(std::string limit, const std::string& message)
      : std::runtime_error(message), limit_(std::move(limit)) {}

  const std::string& limit() const noexcept { return limit_; }

 private:
  std::string limit_;
};

}  // namespace garside

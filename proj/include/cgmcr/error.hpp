#pragma once

#include <stdexcept>
#include <cstddef>
#include <string>
#include <string_view>

namespace cgmcr {

enum class ErrorCode {
  kUnknownDm,
  kUnknownState,
  kUnknownFixture,
  kNotComposable,
  kCompositeMissing,
  kNotInCategory,
  kInvalidModel,
  kMissingPreferences,
  kModelTooSmall,
  kInvalidArgument,
};

// Stable upper-case identifier, e.g. "UNKNOWN_DM".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by parse_model. Line and column are 1-based and point into the
// source text at the first offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string code,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& code() const noexcept { return code_; }
  // Description without the position prefix carried by what().
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string code_;
  std::string message_;
};

}  // namespace cgmcr

#include "cgmcr/error.hpp"

#include <utility>

namespace cgmcr {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kUnknownDm: return "UNKNOWN_DM";
    case ErrorCode::kUnknownState: return "UNKNOWN_STATE";
    case ErrorCode::kUnknownFixture: return "UNKNOWN_FIXTURE";
    case ErrorCode::kNotComposable: return "NOT_COMPOSABLE";
    case ErrorCode::kCompositeMissing: return "COMPOSITE_MISSING";
    case ErrorCode::kNotInCategory: return "NOT_IN_CATEGORY";
    case ErrorCode::kInvalidModel: return "INVALID_MODEL";
    case ErrorCode::kMissingPreferences: return "MISSING_PREFERENCES";
    case ErrorCode::kModelTooSmall: return "MODEL_TOO_SMALL";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, std::string code,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + code + ": " + message),
      line_(line),
      column_(column),
      code_(std::move(code)),
      message_(message) {}

}  // namespace cgmcr

#pragma once

#include <stdexcept>
#include <string>

namespace beatty {

// Machine-readable failure categories. The CLI maps ConfigError to exit
// code 2 and every other category to exit code 3.
enum class ErrorCategory {
    AmbiguousComparison,
    MixedRadicands,
    CapacityExceeded,
    InvalidCharacter,
    RationalAlpha,
    BetaNotInteger,
    GridTooCoarse,
    IoError,
    ConfigError,
};

inline const char* to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::AmbiguousComparison: return "AmbiguousComparison";
        case ErrorCategory::MixedRadicands: return "MixedRadicands";
        case ErrorCategory::CapacityExceeded: return "CapacityExceeded";
        case ErrorCategory::InvalidCharacter: return "InvalidCharacter";
        case ErrorCategory::RationalAlpha: return "RationalAlpha";
        case ErrorCategory::BetaNotInteger: return "BetaNotInteger";
        case ErrorCategory::GridTooCoarse: return "GridTooCoarse";
        case ErrorCategory::IoError: return "IoError";
        case ErrorCategory::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(std::string(to_string(category)) + ": " + message),
          category_(category),
          message_(message) {}

    ErrorCategory category() const noexcept { return category_; }
    const std::string& message() const noexcept { return message_; }

  private:
    ErrorCategory category_;
    std::string message_;
};

}  // namespace beatty

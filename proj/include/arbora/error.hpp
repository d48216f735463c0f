#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arbora {

enum class ErrorCode {
  UnknownGenerator,
  MalformedToken,
  MalformedTable,
  AlphabetMismatch,
  ArityTooSmall,
  ArityMismatch,
  EmptyWord,
  BadVertex,
  LevelTooLarge,
  NameUnavailable,
  StrategyMismatch,
  NodeBudgetExceeded,
  BudgetExceeded,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; callers
// that need to branch on the cause inspect code() rather than the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arbora

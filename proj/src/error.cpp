#include "arbora/error.hpp"

namespace arbora {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::ArityTooSmall: return "ArityTooSmall";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::LevelTooLarge: return "LevelTooLarge";
    case ErrorCode::NameUnavailable: return "NameUnavailable";
    case ErrorCode::StrategyMismatch: return "StrategyMismatch";
    case ErrorCode::NodeBudgetExceeded: return "NodeBudgetExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace arbora

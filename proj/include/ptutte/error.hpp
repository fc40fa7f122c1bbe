#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptutte {

enum class ErrorCode {
  Parse,
  EdgeWithinSide,
  UnknownVertex,
  DuplicateVertex,
  InvalidSpec,
  InvalidArgs,
  UnknownEdge,
  ContractLoop,
  Disconnected,
  NotSpanningTree,
  NotSimple,
  NotALeaf,
  IncompatibleSides,
  TooSmall,
  TooLarge,
  BudgetExceeded,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::EdgeWithinSide: return "EdgeWithinSide";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidArgs: return "InvalidArgs";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::ContractLoop: return "ContractLoop";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotSpanningTree: return "NotSpanningTree";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotALeaf: return "NotALeaf";
    case ErrorCode::IncompatibleSides: return "IncompatibleSides";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

// All library failures are reported through this type; code() is stable and
// the CLI maps it onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ptutte

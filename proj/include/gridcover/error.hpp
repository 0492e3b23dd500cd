#pragma once

#include <stdexcept>
#include <string>

namespace gridcover {

// Every library failure surfaces as one exception type carrying a machine
// readable kind; callers that care switch on kind(), everyone else gets a
// readable what().
enum class ErrorKind {
  MissingOrigin,
  TooSmall,
  DuplicateEntry,
  GenerationFailed,
  SamePoint,
  NotStandardGrid,
  NotSquare,
  DimensionMismatch,
  HypothesisViolated,
  DivisibilityViolated,
  BadParameter,
  NotGeneric,
  DeltaTooSmall,
  BudgetExceeded,
  IoError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MissingOrigin: return "MissingOrigin";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::SamePoint: return "SamePoint";
    case ErrorKind::NotStandardGrid: return "NotStandardGrid";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::DeltaTooSmall: return "DeltaTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace gridcover

#pragma once

#include <stdexcept>
#include <string>

namespace indepforge {

enum class ErrorCode {
  ParseError,
  ValidationError,
  FieldMismatch,
  NotLocal,
  NotZeroDimensional,
  CapExceeded,
  AlgebraMismatch,
  OwnerMismatch,
  NotSubmodule,
  NotMinimalGenerators,
  RelationViolated,
  NotContained,
  PreconditionFailed,
  NoSolution,
  TheoremFalsified,
};

/// All library errors carry a code so the CLI can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::OwnerMismatch: return "OwnerMismatch";
    case ErrorCode::NotSubmodule: return "NotSubmodule";
    case ErrorCode::NotMinimalGenerators: return "NotMinimalGenerators";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::TheoremFalsified: return "TheoremFalsified";
  }
  return "Error";
}

}  // namespace indepforge

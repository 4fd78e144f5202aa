#pragma once

#include <stdexcept>
#include <string>

namespace fibra {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  ArityMismatch,
  Degenerate,
  SingularCurve,
  BadReduction,
  NotOnCurve,
  SingularPosition,
  InvalidSurface,
  Precondition,
  Resource,
  Internal,
};

// Every failure in the library is reported through this type. The code is
// machine readable and is carried through the C API unchanged.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::ArityMismatch: return "arity_mismatch";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::SingularCurve: return "singular_curve";
    case ErrorCode::BadReduction: return "bad_reduction";
    case ErrorCode::NotOnCurve: return "not_on_curve";
    case ErrorCode::SingularPosition: return "singular_position";
    case ErrorCode::InvalidSurface: return "invalid_surface";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Resource: return "resource_exhausted";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace fibra

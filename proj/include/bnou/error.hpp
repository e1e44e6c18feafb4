#pragma once

#include <stdexcept>
#include <string>

namespace bnou {

// Failure classes surfaced by the library. Each operation documents which of
// these it can raise; everything else indicates an internal bug and comes out
// as std::logic_error instead.
enum class ErrorCode {
  DimensionMismatch,
  EmptyInput,
  NotAbsorbing,
  NotSymmetric,
  NegativeScale,
  NegativeInput,
  MalformedRep,
  SpaceMismatch,
  BoundTooSmall,
  NotPositive,
  NotAState,
  InconsistentValues,
  WrongSpace,
  NotDirected,
  EmptyFamily,
  UnknownFigure,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotAbsorbing: return "NotAbsorbing";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NegativeScale: return "NegativeScale";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::MalformedRep: return "MalformedRep";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotAState: return "NotAState";
    case ErrorCode::InconsistentValues: return "InconsistentValues";
    case ErrorCode::WrongSpace: return "WrongSpace";
    case ErrorCode::NotDirected: return "NotDirected";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace bnou

#pragma once

#include <stdexcept>
#include <string>

namespace rootlab {

enum class ErrorKind {
  ParseError,
  UnsupportedOrder,
  EvalError,
  DomainError,
  DegenerateNodes,
  DerivativeZero,
  SecantDegenerate,
  WeightPole,
  ApproxDerivativeZero,
  DegenerateStep,
  NotSimpleRoot,
  InsufficientData,
  ExactRootReached,
  IoError,
};

const char* error_kind_name(ErrorKind k);

/// Typed failure used across the library. Step errors carry which
/// sub-expression degenerated in what().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::EvalError: return "EvalError";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DegenerateNodes: return "DegenerateNodes";
    case ErrorKind::DerivativeZero: return "DerivativeZero";
    case ErrorKind::SecantDegenerate: return "SecantDegenerate";
    case ErrorKind::WeightPole: return "WeightPole";
    case ErrorKind::ApproxDerivativeZero: return "ApproxDerivativeZero";
    case ErrorKind::DegenerateStep: return "DegenerateStep";
    case ErrorKind::NotSimpleRoot: return "NotSimpleRoot";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::ExactRootReached: return "ExactRootReached";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace rootlab

#pragma once

#include <stdexcept>
#include <string>

namespace dicon {

enum class ErrorKind {
  InvalidArgument,
  LambdaDegenerate,
  TooLarge,
  NonIntegerQuotient,
  OrthogonalityViolated,
  HypothesisFailed,
};

inline const char* errorKindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::LambdaDegenerate: return "lambda-degenerate";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::NonIntegerQuotient: return "non-integer-quotient";
    case ErrorKind::OrthogonalityViolated: return "orthogonality-violated";
    case ErrorKind::HypothesisFailed: return "hypothesis-failed";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(errorKindName(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace dicon

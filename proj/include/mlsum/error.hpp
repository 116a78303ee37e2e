#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlsum {

enum class ErrorCode {
  NotSpacelike,
  Degenerate,
  Overflow,
  NotHyperbolic,
  InvalidLength,
  InvalidAngle,
  NonHyperbolicBoundary,
  DegenerateWeights,
  NoGenericPoint,
  BasePointOnAxis,
  IllConditioned,
  RatioMismatch,
  NegativeWeight,
  AngleCollapse,
  NumericalBreakdown,
  MalformedConfig,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this type; `code()` is
/// what callers branch on, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mlsum

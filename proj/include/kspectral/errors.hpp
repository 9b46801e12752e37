#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kspectral {

enum class ErrorCode {
  InvalidRadius,
  GridTooCoarse,
  LengthMismatch,
  EvalAtZero,
  DegenerateFunction,
  OnBoundary,
  ResolventSingular,
  SingularMatrix,
  SpectrumOutside,
  PointOutside,
  NotNormalized,
  NotMember,
  NegativeInput,
  SamplerExhausted,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kspectral

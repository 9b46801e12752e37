#include "kspectral/errors.hpp"

namespace kspectral {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EvalAtZero: return "EvalAtZero";
    case ErrorCode::DegenerateFunction: return "DegenerateFunction";
    case ErrorCode::OnBoundary: return "OnBoundary";
    case ErrorCode::ResolventSingular: return "ResolventSingular";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SpectrumOutside: return "SpectrumOutside";
    case ErrorCode::PointOutside: return "PointOutside";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::SamplerExhausted: return "SamplerExhausted";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace kspectral

#include "mlsum/error.hpp"

namespace mlsum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSpacelike: return "NotSpacelike";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::InvalidAngle: return "InvalidAngle";
    case ErrorCode::NonHyperbolicBoundary: return "NonHyperbolicBoundary";
    case ErrorCode::DegenerateWeights: return "DegenerateWeights";
    case ErrorCode::NoGenericPoint: return "NoGenericPoint";
    case ErrorCode::BasePointOnAxis: return "BasePointOnAxis";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::RatioMismatch: return "RatioMismatch";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::AngleCollapse: return "AngleCollapse";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::MalformedConfig: return "MalformedConfig";
  }
  return "Unknown";
}

}  // namespace mlsum

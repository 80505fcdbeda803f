#include "acmpts/error.hpp"

namespace acmpts {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyConfiguration: return "EmptyConfiguration";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadDirection: return "BadDirection";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::BadLevel: return "BadLevel";
    case ErrorCode::WouldBeEmpty: return "WouldBeEmpty";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::PathPreconditionFailed: return "PathPreconditionFailed";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::VanishingConditionViolated: return "VanishingConditionViolated";
    case ErrorCode::ReducednessGuardViolated: return "ReducednessGuardViolated";
    case ErrorCode::OverlappingSummands: return "OverlappingSummands";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace acmpts

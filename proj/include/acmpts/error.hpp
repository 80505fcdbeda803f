#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acmpts {

enum class ErrorCode {
  EmptyConfiguration,
  DimensionMismatch,
  BadDirection,
  BadPermutation,
  BadLevel,
  WouldBeEmpty,
  BadDegree,
  PathPreconditionFailed,
  InternalInvariantViolation,
  FaceNotInComplex,
  VanishingConditionViolated,
  ReducednessGuardViolated,
  OverlappingSummands,
  ParseError,
  TooLarge,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace acmpts

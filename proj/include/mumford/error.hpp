#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mumford {

enum class ErrorKind {
  DivisionByZeroToPrecision,
  ParamsMismatch,
  InsufficientPrecision,
  InvalidArgument,
  CoincidentEnds,
  NotParabolic,
  MirrorsIntersect,
  DuplicatePoints,
  SearchRadiusExceeded,
  PreconditionViolated,
  AssertionFailed,
  GenusTooSmall,
  DuplicateBranchPoints,
  InfinityBranchPoint,
  BranchPointSentToInfinity,
  CriterionViolated,
  NotCovering,
  MultipleMinimizers,
  RadiusNotInValueGroup,
  PrecisionExhausted,
  PoleAtOrbitPoint,
  RadiusViolation,
  NotNormalForm,
  NonNegativeEtaValuation,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mumford

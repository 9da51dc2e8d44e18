#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace axial {

enum class ErrorKind {
  ParseError,
  UsageError,
  DimensionMismatch,
  CommutativityViolation,
  NotIdempotent,
  AlgebraMismatch,
  NotSemisimple,
  NotSpanning,
  NotPrimitiveAxis,
  NotBasisOfAxes,
  Inconsistent,
  FormValueOne,
  SameAxis,
  DegenerateDenominator,
  RecursionBasisFailure,
  ResidualNonzero,
  NotUnit,
  DegenerateForm,
  NotInvolution,
  BadProductOrder,
  InvariantFailure,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CommutativityViolation: return "CommutativityViolation";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotSpanning: return "NotSpanning";
    case ErrorKind::NotPrimitiveAxis: return "NotPrimitiveAxis";
    case ErrorKind::NotBasisOfAxes: return "NotBasisOfAxes";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::FormValueOne: return "FormValueOne";
    case ErrorKind::SameAxis: return "SameAxis";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::RecursionBasisFailure: return "RecursionBasisFailure";
    case ErrorKind::ResidualNonzero: return "ResidualNonzero";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::BadProductOrder: return "BadProductOrder";
    case ErrorKind::InvariantFailure: return "InvariantFailure";
  }
  return "Unknown";
}

/// Every failure raised by the library. The kind identifies the violated
/// precondition; the message carries the offending data.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace axial

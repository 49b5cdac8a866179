#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcanon {

enum class ErrorCode {
  BarAsymmetry,
  OddExponent,
  InexactDivision,
  NegativeWeight,
  DimensionMismatch,
  TruncationTooSmall,
  NotReduced,
  CrossCheckFailure,
  TriangularityViolation,
  CountMismatch,
  InvalidDiagram,
  NotInP,
  WeightMismatch,
  ZeroBlock,
  StructuralMismatch,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to a machine-readable record.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace qcanon

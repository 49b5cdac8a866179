#include "qcanon/error.hpp"

namespace qcanon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BarAsymmetry: return "BarAsymmetry";
    case ErrorCode::OddExponent: return "OddExponent";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorCode::TriangularityViolation: return "TriangularityViolation";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::NotInP: return "NotInP";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::ZeroBlock: return "ZeroBlock";
    case ErrorCode::StructuralMismatch: return "StructuralMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace qcanon

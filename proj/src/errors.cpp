#include "qpascal/errors.hpp"

namespace qpascal {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::QFactorialVanishes: return "QFactorialVanishes";
    case ErrorCode::LambdaConditionViolated: return "LambdaConditionViolated";
    case ErrorCode::BraidRelationFailed: return "BraidRelationFailed";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::InadmissibleLambda: return "InadmissibleLambda";
    case ErrorCode::UnsupportedMultiplicity: return "UnsupportedMultiplicity";
    case ErrorCode::UnsupportedPattern: return "UnsupportedPattern";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::EigenvalueCollision: return "EigenvalueCollision";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qpascal

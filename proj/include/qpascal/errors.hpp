#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qpascal {

// Machine-readable error codes. The CLI maps these to exit codes and echoes
// the code name in reports.
enum class ErrorCode {
  DivisionByZero,
  ConductorMismatch,
  ShapeMismatch,
  SingularMatrix,
  IndexOutOfRange,
  QFactorialVanishes,
  LambdaConditionViolated,
  BraidRelationFailed,
  ZeroParameter,
  InadmissibleLambda,
  UnsupportedMultiplicity,
  UnsupportedPattern,
  ConstraintViolated,
  EigenvalueCollision,
  ParseError,
  InvalidArgument,
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError,
              what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qpascal

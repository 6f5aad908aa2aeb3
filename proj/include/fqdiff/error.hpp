#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqdiff {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  UnsupportedFieldShape,
  ZeroDenominator,
  NotQuadratic,
  RepeatedRoots,
  PerfectSquareInput,
  NotInU1,
  ZeroDirection,
  WrongUClass,
  UnsupportedCharacteristic,
  BudgetExceeded,
  IdentityViolation,
  BranchAsymmetry,
  InternalInconsistency,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fqdiff

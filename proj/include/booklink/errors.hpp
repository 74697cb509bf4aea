#pragma once

#include <stdexcept>
#include <string>

namespace booklink {

enum class ErrorCode {
  SyntaxError,
  PositionError,
  ClosureError,
  ParityError,
  InvalidWord,
  NoSuchSite,
  MultiComponent,
  TooManyCrossings,
  NoMatch,
  PatternMismatch,
  NotDestabilizable,
  NotStabilizable,
  NoFreeStrand,
  NotAPlat,
  NoBackwardArc,
  InvalidChoice,
  BudgetExceeded,
  NotDecreasing,
  MissingPenultimateOne,
  NoTerminalZero,
  BadIndex,
  InvalidSpectrum,
  SchemaError,
  CountMismatch,
  InvariantViolation,
  Missing,
  ParseError,
  NotA12Representative,
  IndexMismatch,
  IdentityMismatch,
  RowMismatch,
  MissingWitness,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace booklink

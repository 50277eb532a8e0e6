#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torsion {

// Failure categories. The CLI maps each category onto an exit code.
enum class ErrorKind {
  Syntax,
  Topology,
  OddCrossingParity,
  EmptyResult,
  NotDivisible,
  NotSymmetrizable,
  NonUnitMismatch,
  NotAlgebraicallySplit,
  BettiOutOfScope,
  BadParity,
  LiftFailure,
  GroupMismatch,
  NoDualityWitness,
  ZeroTorsion,
  BettiMismatch,
  NegativeSquare,
  BadGenus,
  InvalidArgument,
  Consistency,
  Io,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure with the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Syntax,
              "at offset " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace torsion

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superweyl {

enum class ErrorKind {
  // input syntax
  ParseError,
  UnknownSymbol,
  MalformedDatumFile,
  // preconditions
  UnsupportedFamily,
  DimensionMismatch,
  IsotropicRoot,
  IndexOutOfRange,
  NoSecondComponent,
  GroupTooLarge,
  RingMismatch,
  ConstantTermNotOne,
  NegativeExponentAfterCollapse,
  NotDominant,
  NotTypical,
  NonIntegralExponent,
  GraphTooLarge,
  NotTotallyDisconnected,
  OverlappingParts,
  IndexNotInterior,
  NotSinglyAtypical,
  WrongFamily,
  TruncationTooSmall,
  UnsupportedCase,
  MixedAtypicalityTypes,
  // a mathematical invariant the code relies on did not hold
  Internal,
};

std::string_view kind_name(ErrorKind kind);

/// True for the kinds that describe malformed user input rather than a
/// well-formed request whose mathematical preconditions fail.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

/// Always-on internal assertion.
inline void ensure(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::Internal, message);
}

}  // namespace superweyl

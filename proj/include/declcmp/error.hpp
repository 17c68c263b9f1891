#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace declcmp {

enum class ErrorCode {
  // lattice construction
  EmptyLattice,
  DuplicateElement,
  UnknownElement,
  NotAPartialOrder,
  NoUniqueBottom,
  NoUniqueTop,
  NotALattice,
  // contexts and relations
  ParseError,
  DuplicateAttribute,
  UnknownAttribute,
  NotTotal,
  DegenerateLattice,
  ReflexivityViolation,
  ArityMismatch,
  HeaderMismatch,
  RaggedRow,
  // abstract lattices and realities
  CapExceeded,
  InvalidThreshold,
  InvalidInterpretation,
  TheoremViolation,
  InconsistentFlag,
  // decision procedures
  WitnessVerificationFailed,
  MalformedClause,
  EnumerationCapExceeded,
  TooManyVariables,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace declcmp

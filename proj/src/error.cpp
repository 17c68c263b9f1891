#include "declcmp/error.hpp"

namespace declcmp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyLattice: return "EmptyLattice";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NoUniqueBottom: return "NoUniqueBottom";
    case ErrorCode::NoUniqueTop: return "NoUniqueTop";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateAttribute: return "DuplicateAttribute";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::NotTotal: return "NotTotal";
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::ReflexivityViolation: return "ReflexivityViolation";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::RaggedRow: return "RaggedRow";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::InvalidInterpretation: return "InvalidInterpretation";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::InconsistentFlag: return "InconsistentFlag";
    case ErrorCode::WitnessVerificationFailed: return "WitnessVerificationFailed";
    case ErrorCode::MalformedClause: return "MalformedClause";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
  }
  return "Unknown";
}

} // namespace declcmp

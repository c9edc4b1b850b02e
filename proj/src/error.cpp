#include "padiclat/error.hpp"

namespace padiclat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OracleInconclusive: return "OracleInconclusive";
    case ErrorKind::ClassCollision: return "ClassCollision";
    case ErrorKind::NotUniformizer: return "NotUniformizer";
    case ErrorKind::ReductionFailed: return "ReductionFailed";
    case ErrorKind::NotEisenstein: return "NotEisenstein";
    case ErrorKind::DegenerateGenerator: return "DegenerateGenerator";
    case ErrorKind::BadExponents: return "BadExponents";
    case ErrorKind::BadMatrix: return "BadMatrix";
    case ErrorKind::DeltaTooSmall: return "DeltaTooSmall";
    case ErrorKind::HashFailure: return "HashFailure";
    case ErrorKind::DecryptionAmbiguous: return "DecryptionAmbiguous";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InconsistentHeader: return "InconsistentHeader";
  }
  return "Unknown";
}

}  // namespace padiclat

#include "sring/error.hpp"

namespace sring {

ErrorKind kind_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularConditionViolated:
    case ErrorCode::NoInducingUnit:
    case ErrorCode::ReconstructionFailed:
    case ErrorCode::DualNotAnSRing:
    case ErrorCode::IntersectionNotAnSRing:
    case ErrorCode::TheoryViolation:
      return ErrorKind::Theory;
    case ErrorCode::LimitExceeded:
      return ErrorKind::Limit;
    default:
      return ErrorKind::Input;
  }
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::MissingIdentityClass: return "MissingIdentityClass";
    case ErrorCode::NotInverseClosed: return "NotInverseClosed";
    case ErrorCode::NotMultiplicativelyClosed: return "NotMultiplicativelyClosed";
    case ErrorCode::NotASection: return "NotASection";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotEquivalent: return "NotEquivalent";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SingularConditionViolated: return "SingularConditionViolated";
    case ErrorCode::NoInducingUnit: return "NoInducingUnit";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::DualNotAnSRing: return "DualNotAnSRing";
    case ErrorCode::IntersectionNotAnSRing: return "IntersectionNotAnSRing";
    case ErrorCode::TheoryViolation: return "TheoryViolation";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace sring

#pragma once

#include <stdexcept>
#include <string>

namespace sring {

enum class ErrorCode {
  // malformed or invalid input
  InvalidInput,
  NotADivisor,
  NotAPartition,
  MissingIdentityClass,
  NotInverseClosed,
  NotMultiplicativelyClosed,
  NotASection,
  NotCoprime,
  NotEquivalent,
  PreconditionViolated,
  // a mathematical invariant the computation relies on failed
  SingularConditionViolated,
  NoInducingUnit,
  ReconstructionFailed,
  DualNotAnSRing,
  IntersectionNotAnSRing,
  TheoryViolation,
  // configured search bound exceeded
  LimitExceeded,
};

enum class ErrorKind { Input, Theory, Limit };

ErrorKind kind_of(ErrorCode code) noexcept;
const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace sring

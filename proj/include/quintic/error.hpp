#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quintic {

enum class ErrorCode {
  InvalidArgument,
  DivisionByZero,
  GcdUndefined,
  ZeroInput,
  CompositeInput,
  UnprovenFactorization,
  NoPrimaryAssociate,
  SymbolUndefined,
  NotCoprime,
  EverythingIsAResidue,
  FieldTooLarge,
  NotFifthPowerFree,
  RangeInvalid,
  WrongCongruenceClass,
  BoundExceeded,
  NotClassified,
  QstarOutOfRange,
  NoAdmissibleGenerator,
  ContradictionWitness,
  NoWitnessFound,
  ConditionFailed,
  InvalidModel,
  InternalInvariant,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code;
/// the CLI maps InternalInvariant to exit status 1 and everything else to 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quintic

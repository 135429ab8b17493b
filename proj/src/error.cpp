#include "quintic/error.hpp"

namespace quintic {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::GcdUndefined: return "GcdUndefined";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::CompositeInput: return "CompositeInput";
    case ErrorCode::UnprovenFactorization: return "UnprovenFactorization";
    case ErrorCode::NoPrimaryAssociate: return "NoPrimaryAssociate";
    case ErrorCode::SymbolUndefined: return "SymbolUndefined";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::EverythingIsAResidue: return "EverythingIsAResidue";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NotFifthPowerFree: return "NotFifthPowerFree";
    case ErrorCode::RangeInvalid: return "RangeInvalid";
    case ErrorCode::WrongCongruenceClass: return "WrongCongruenceClass";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotClassified: return "NotClassified";
    case ErrorCode::QstarOutOfRange: return "QstarOutOfRange";
    case ErrorCode::NoAdmissibleGenerator: return "NoAdmissibleGenerator";
    case ErrorCode::ContradictionWitness: return "ContradictionWitness";
    case ErrorCode::NoWitnessFound: return "NoWitnessFound";
    case ErrorCode::ConditionFailed: return "ConditionFailed";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace quintic

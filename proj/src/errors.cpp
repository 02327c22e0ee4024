#include "gqlab/errors.hpp"

namespace gqlab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonAssociative: return "NonAssociative";
        case ErrorCode::NoIdentity: return "NoIdentity";
        case ErrorCode::NoInverse: return "NoInverse";
        case ErrorCode::InvalidFieldOrder: return "InvalidFieldOrder";
        case ErrorCode::OrderOverflow: return "OrderOverflow";
        case ErrorCode::NotNormal: return "NotNormal";
        case ErrorCode::GroupMismatch: return "GroupMismatch";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::StructureError: return "StructureError";
        case ErrorCode::NotAnOval: return "NotAnOval";
        case ErrorCode::NotInU0: return "NotInU0";
        case ErrorCode::HypothesisViolation: return "HypothesisViolation";
        case ErrorCode::NonIntegralValue: return "NonIntegralValue";
        case ErrorCode::PrimeSearchExhausted: return "PrimeSearchExhausted";
        case ErrorCode::SamePoint: return "SamePoint";
        case ErrorCode::NotSquareOrder: return "NotSquareOrder";
        case ErrorCode::NotRegularPoint: return "NotRegularPoint";
        case ErrorCode::BasePointNotRegular: return "BasePointNotRegular";
        case ErrorCode::IdentityElement: return "IdentityElement";
        case ErrorCode::InvolutionOrIdentity: return "InvolutionOrIdentity";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::UnsupportedPair: return "UnsupportedPair";
        case ErrorCode::NoSquareRootOfMinusOne: return "NoSquareRootOfMinusOne";
        case ErrorCode::InconsistentClassData: return "InconsistentClassData";
        case ErrorCode::CoefficientOverflow: return "CoefficientOverflow";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::int64_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace gqlab

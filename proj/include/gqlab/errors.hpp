#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gqlab {

enum class ErrorCode {
    NonAssociative,
    NoIdentity,
    NoInverse,
    InvalidFieldOrder,
    OrderOverflow,
    NotNormal,
    GroupMismatch,
    SizeMismatch,
    StructureError,
    NotAnOval,
    NotInU0,
    HypothesisViolation,
    NonIntegralValue,
    PrimeSearchExhausted,
    SamePoint,
    NotSquareOrder,
    NotRegularPoint,
    BasePointNotRegular,
    IdentityElement,
    InvolutionOrIdentity,
    TooLarge,
    UnsupportedPair,
    NoSquareRootOfMinusOne,
    InconsistentClassData,
    CoefficientOverflow,
    InvalidArgument,
    SchemaError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type. `witness` carries
// the offending ids (triple, pair, element...) when there is one.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::vector<std::int64_t> witness = {});

    ErrorCode code() const noexcept { return code_; }
    const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

private:
    ErrorCode code_;
    std::vector<std::int64_t> witness_;
};

}  // namespace gqlab

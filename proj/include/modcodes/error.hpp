#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modcodes {

enum class ErrorCode {
    NotPrime,
    ZeroInverse,
    ModulusMismatch,
    EvenModulus,
    LengthMismatch,
    DimensionMismatch,
    NotSystematic,
    FractionalExponent,
    UnsupportedWeight,
    TruncationTooSmall,
    NotInvertible,
    SingularReduction,
    BadReduction,
    PointNotOnCurve,
    NoModelForLevel,
    HasseViolation,
    InfinityEvaluation,
    DenominatorVanishes,
    ZeroTriple,
    DuplicatePoint,
    SupportCollision,
    TooLarge,
    NonIntegralResult,
    NonIntegralGenus,
    PreconditionFailed,
    NotASquare,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error carrying a machine-readable code. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace modcodes

#include "modcodes/error.hpp"

namespace modcodes {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::EvenModulus: return "EvenModulus";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSystematic: return "NotSystematic";
        case ErrorCode::FractionalExponent: return "FractionalExponent";
        case ErrorCode::UnsupportedWeight: return "UnsupportedWeight";
        case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::SingularReduction: return "SingularReduction";
        case ErrorCode::BadReduction: return "BadReduction";
        case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::NoModelForLevel: return "NoModelForLevel";
        case ErrorCode::HasseViolation: return "HasseViolation";
        case ErrorCode::InfinityEvaluation: return "InfinityEvaluation";
        case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorCode::ZeroTriple: return "ZeroTriple";
        case ErrorCode::DuplicatePoint: return "DuplicatePoint";
        case ErrorCode::SupportCollision: return "SupportCollision";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NonIntegralResult: return "NonIntegralResult";
        case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NotASquare: return "NotASquare";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace modcodes

#include "mfkit/error.hpp"

namespace mfkit {

const char* error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TargetMismatch: return "TargetMismatch";
    case ErrorCode::NotAFactorization: return "NotAFactorization";
    case ErrorCode::CommutationFailure: return "CommutationFailure";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::ChainMismatch: return "ChainMismatch";
    case ErrorCode::NoValidPlacement: return "NoValidPlacement";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::InvalidVariant: return "InvalidVariant";
    case ErrorCode::InfeasibleShape: return "InfeasibleShape";
    case ErrorCode::UndefinedSplit: return "UndefinedSplit";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace mfkit

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mfkit {

enum class ErrorCode {
    Parse,
    EmptyInput,
    ZeroInput,
    Overflow,
    DimensionMismatch,
    SizeMismatch,
    TargetMismatch,
    NotAFactorization,
    CommutationFailure,
    NotAMorphism,
    ChainMismatch,
    NoValidPlacement,
    WitnessNotFound,
    InvalidVariant,
    InfeasibleShape,
    UndefinedSplit,
    Internal,
};

const char* error_code_name(ErrorCode code);

/// Position of an offending matrix entry (0-based) or an input character.
struct Location {
    std::size_t row = 0;
    std::size_t col = 0;
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<Location> where = std::nullopt)
        : std::runtime_error(message), code_(code), where_(where)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const std::optional<Location>& where() const noexcept { return where_; }

private:
    ErrorCode code_;
    std::optional<Location> where_;
};

/// Parse failure; `position` is the 0-based character offset in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(ErrorCode::Parse, message + " at position " + std::to_string(position)),
          position_(position)
    {
    }

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace mfkit

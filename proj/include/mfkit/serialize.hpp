#pragma once

// Factorization file format:
//   {"f": "<poly>", "size": n, "phi": [["<poly>", ...], ...], "psi": [[...], ...]}

#include <cstddef>
#include <string>
#include <string_view>

#include "mfkit/factorization.hpp"

namespace mfkit {

/// A factorization file as read, before any product check.
struct RawFactorization {
    Polynomial f;
    std::size_t size = 0;
    PolyMatrix phi;
    PolyMatrix psi;
};

std::string to_json(const MatrixFactorization& x);

/// Throws ParseError for malformed JSON, missing or mistyped fields, ragged
/// or mis-sized matrices, or unparsable entries.
RawFactorization parse_factorization_json(std::string_view text);

/// Verifies a raw factorization; throws as MatrixFactorization::make.
MatrixFactorization to_factorization(RawFactorization raw);

/// Human-oriented rendering with aligned columns.
std::string to_text(const MatrixFactorization& x);

}  // namespace mfkit

#pragma once

// The improved algorithm: factor every g_ji with the standard method, fold the
// factors of each product with the multiplicative tensor product, then fold
// the monomial part and all products with the additive tensor product.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfkit/expr.hpp"
#include "mfkit/factorization.hpp"

namespace mfkit {

struct ImprovedOptions {
    int yoshino_variant = 0;  // 0..3
    int mult_variant = 0;     // 0 or 1
    /// Expand a product term before factoring when its written form would give
    /// a larger factorization than the standard method on its expansion.
    bool auto_expand = false;
};

struct ImprovedResult {
    MatrixFactorization factorization;
    SizePrediction prediction;
};

/// Throws EmptyInput for a form without terms.
ImprovedResult improved_factorize(const SummandForm& sf, const ImprovedOptions& options = {});

/// Standard method on the written-order expansion (see expand_written).
MatrixFactorization standard_factorize(const SummandForm& sf);

/// Standard method on the graded-lex ordered expansion.
MatrixFactorization standard_factorize_grlex(const Polynomial& f);

struct CompareReport {
    SizePrediction prediction;
    long standard_exp = 0;
    long improved_exp = 0;
    /// Unset when the standard factorization was not built because it would
    /// exceed the build limit; its size is then known from the term count.
    std::optional<bool> verified_standard;
    bool verified_improved = false;

    [[nodiscard]] long ratio_exp() const { return standard_exp - improved_exp; }
    /// Sizes agree with predict_sizes, and when no cancellation happened the
    /// ratio equals the closed form.
    [[nodiscard]] bool consistent() const;
    [[nodiscard]] std::string to_json() const;
};

struct CompareOptions {
    ImprovedOptions improved;
    std::size_t standard_build_limit = 64;
};

CompareReport compare_methods(const SummandForm& sf, const CompareOptions& options = {});

struct Shape {
    std::size_t s = 1;
    std::vector<std::vector<std::size_t>> p;  // p[j][i]; l = p.size(), m_j = p[j].size()
    std::string vars = "xyz";
    unsigned max_deg = 3;

    [[nodiscard]] std::size_t l() const { return p.size(); }
    [[nodiscard]] long theorem_ratio_exp() const;
    [[nodiscard]] long improved_exp() const;
};

/// Deterministic random instance of the given shape. Monomials have
/// coefficient +-1 and total degree 1..max_deg over vars; monomials within a
/// factor and the monomial terms are distinct. Instances whose expansion
/// cancels or merges are re-rolled. Throws InfeasibleShape when the shape
/// cannot be met.
SummandForm generate_instance(std::uint64_t seed, const Shape& shape);

}  // namespace mfkit

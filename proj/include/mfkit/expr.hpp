#pragma once

// Polynomials written as a sum of monomials and products of sums,
//
//   f = t_1 + ... + t_s + g_11 ... g_1m_1 + ... + g_l1 ... g_lm_l,
//
// kept in the shape the user wrote them: term order, factor order, and the
// monomial order inside each factor are all preserved.
//
// Grammar (whitespace ignored, '*' optional between factors):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := INT | INT '/' INT | VAR ['^' INT] | '(' expr ')' ['^' INT]
//   VAR    := [a-z]

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mfkit/polynomial.hpp"

namespace mfkit {

/// A sum of nonzero monomials with distinct exponents, in written order.
using WrittenSum = std::vector<Monomial>;

Polynomial to_polynomial(std::span<const Monomial> sum);
std::string format_sum(std::span<const Monomial> sum);

struct MonomialTerm {
    Monomial monomial;
    friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

struct ProductTerm {
    std::vector<WrittenSum> factors;  // m_j >= 1 nonzero factors
    friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

using Term = std::variant<MonomialTerm, ProductTerm>;

struct SummandForm {
    std::vector<Term> terms;

    [[nodiscard]] std::vector<Monomial> monomial_terms() const;
    [[nodiscard]] std::vector<const ProductTerm*> product_terms() const;
    /// s, the number of monomial terms.
    [[nodiscard]] std::size_t s() const;
    /// l, the number of product terms.
    [[nodiscard]] std::size_t l() const;

    friend bool operator==(const SummandForm&, const SummandForm&) = default;
};

/// Throws ParseError with the offending offset, EmptyInput for blank text,
/// and ZeroInput when the expression is identically zero. A parenthesised
/// factor that sums to zero is a ParseError.
SummandForm parse(std::string_view text);

/// Parses a single polynomial (any expression, "0" allowed) and expands it.
Polynomial parse_polynomial(std::string_view text);

/// Structure-preserving printer: parse(to_string(sf)) == sf.
std::string to_string(const SummandForm& sf);

Polynomial expand(const SummandForm& sf);
Polynomial expand(const ProductTerm& term);

/// The expansion as a monomial list in first-appearance order. A product
/// g_1 ... g_m is expanded with later factors in the outer loops; like terms
/// merge into the position of their first appearance and zeros are dropped.
WrittenSum expand_written(const SummandForm& sf);

enum class FormKind { Plain, SimpleSummandReduced, SummandReduced };

const char* to_string(FormKind kind);

struct Classification {
    FormKind kind = FormKind::Plain;
    std::vector<std::string> reasons;  // why the form is Plain, if it is
    std::vector<std::string> lints;    // two-factor products better written expanded
};

/// Summand-reduced when
///   (a) s == 0 and there are at least two product terms, or s >= 1 and at least one;
///   (b) every product term expands to more monomials than the sum of its factors' counts;
///   (c) some product term has at least two factors.
/// Simple summand-reduced when additionally there are at least two terms,
/// every product term has exactly two factors, and one of them has p*q >= 6.
Classification classify(const SummandForm& sf);

/// Sizes as base-2 exponents, so they stay exact for any instance.
struct SizePrediction {
    long standard_exp = 0;  // N - 1, N the expanded monomial count
    long improved_exp = 0;  // sum_j sum_i p_ji + s - 1
    std::size_t expanded_terms = 0;     // N
    std::size_t no_cancel_terms = 0;    // s + sum_j prod_i p_ji
    long theorem_ratio_exp = 0;         // sum_j (prod_i p_ji - sum_i p_ji)
    bool cancellation = false;          // N != s + sum_j prod_i p_ji

    [[nodiscard]] long ratio_exp() const { return standard_exp - improved_exp; }
};

SizePrediction predict_sizes(const SummandForm& sf);

/// 2^e as a decimal string (e may be negative, giving "1/2^k").
std::string pow2_string(long e);

}  // namespace mfkit

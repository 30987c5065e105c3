#pragma once

// Sparse multivariate polynomials over the rationals.
//
// Variables are the single lowercase letters a..z. A polynomial is stored as a
// vector of monomials kept in graded-lex descending order (total degree first,
// then lexicographic with 'a' most significant), with no zero coefficients.
// That makes the term vector itself the canonical form: two polynomials are
// equal iff their term vectors are equal.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mfkit {

using Rational = mpq_class;

inline constexpr int kNumVariables = 26;

/// Exponent vector indexed by variable ('a' = 0 ... 'z' = 25).
class Exponents {
public:
    using value_type = std::uint16_t;

    Exponents() = default;

    static Exponents of(char var, unsigned power);

    [[nodiscard]] value_type operator[](int var) const { return e_[static_cast<std::size_t>(var)]; }
    void set(int var, unsigned power);

    [[nodiscard]] unsigned degree() const { return degree_; }
    [[nodiscard]] bool is_constant() const { return degree_ == 0; }
    [[nodiscard]] int num_variables() const;
    /// Index of the first variable with nonzero exponent, or -1.
    [[nodiscard]] int first_variable() const;

    /// Throws mfkit::Error(Overflow) if an exponent would exceed the storage type.
    [[nodiscard]] Exponents operator*(const Exponents& other) const;

    friend bool operator==(const Exponents& a, const Exponents& b) = default;

private:
    std::array<value_type, kNumVariables> e_{};
    unsigned degree_ = 0;
};

/// Strict "comes first in printing order" relation: graded-lex descending.
bool grlex_before(const Exponents& a, const Exponents& b);

struct Monomial {
    Rational coefficient;
    Exponents exponents;

    static Monomial constant(const Rational& c) { return {c, {}}; }
    static Monomial variable(char var, unsigned power = 1, const Rational& c = 1);

    [[nodiscard]] bool is_zero() const { return sgn(coefficient) == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.coefficient == b.coefficient && a.exponents == b.exponents;
    }
};

Monomial operator*(const Monomial& a, const Monomial& b);

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Monomial& m);  // NOLINT(google-explicit-constructor)
    Polynomial(long c);             // NOLINT(google-explicit-constructor)
    explicit Polynomial(const Rational& c);

    /// Sorts, merges like terms, and drops zeros.
    static Polynomial from_terms(std::vector<Monomial> terms);
    static Polynomial variable(char var, unsigned power = 1) { return Monomial::variable(var, power); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
    [[nodiscard]] std::size_t monomial_count() const { return terms_.size(); }
    [[nodiscard]] std::span<const Monomial> terms() const { return terms_; }

    [[nodiscard]] std::string to_string() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    std::vector<Monomial> terms_;
};

/// Sum of pairwise products sum_k a_k * b_k, canonicalised once.
Polynomial sum_of_products(std::span<const std::pair<const Polynomial*, const Polynomial*>> pairs);

std::size_t monomial_count(const Polynomial& p);

/// Splits a nonzero monomial m into (g, h) with g*h == m; the coefficient
/// goes to g. A single-variable power x^k (k >= 2) splits evenly as
/// (c*x^floor(k/2), x^ceil(k/2)); otherwise g is the first variable raised to
/// its full exponent and h is the rest. Constants split as (c, 1).
std::pair<Monomial, Monomial> leading_split(const Monomial& m);

std::string to_string(const Monomial& m);

}  // namespace mfkit

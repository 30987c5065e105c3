#pragma once

// Random generators and independent oracles shared by the test suites.
// The oracles work on plain mpq_class values and dense index arithmetic, not
// on the library's polynomial or matrix code.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mfkit/expr.hpp"
#include "mfkit/factorization.hpp"
#include "mfkit/poly_matrix.hpp"
#include "mfkit/polynomial.hpp"

namespace testing_support {

using mfkit::Monomial;
using mfkit::PolyMatrix;
using mfkit::Polynomial;
using mfkit::Rational;

using Point = std::map<char, Rational>;
using Dense = std::vector<std::vector<Rational>>;

inline Polynomial P(const char* text)
{
    return mfkit::parse_polynomial(text);
}

inline PolyMatrix M(std::initializer_list<std::initializer_list<const char*>> rows)
{
    std::vector<std::vector<Polynomial>> out;
    for (const auto& r : rows) {
        std::vector<Polynomial> row;
        for (const char* e : r) {
            row.push_back(P(e));
        }
        out.push_back(std::move(row));
    }
    return PolyMatrix::from_rows(out);
}

// ---- evaluation oracle ----

inline Rational power(const Rational& base, unsigned e)
{
    Rational r = 1;
    for (unsigned k = 0; k < e; ++k) {
        r *= base;
    }
    return r;
}

inline Rational eval(const Polynomial& p, const Point& at)
{
    Rational sum = 0;
    for (const Monomial& m : p.terms()) {
        Rational t = m.coefficient;
        for (int v = 0; v < mfkit::kNumVariables; ++v) {
            if (m.exponents[v] != 0) {
                t *= power(at.at(static_cast<char>('a' + v)), m.exponents[v]);
            }
        }
        sum += t;
    }
    return sum;
}

inline Dense eval(const PolyMatrix& a, const Point& at)
{
    Dense out(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out[r][c] = eval(a(r, c), at);
        }
    }
    return out;
}

inline Dense dense_mul(const Dense& a, const Dense& b)
{
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    Dense out(n, std::vector<Rational>(m));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Rational s = 0;
            for (std::size_t t = 0; t < k; ++t) {
                s += a[i][t] * b[t][j];
            }
            out[i][j] = s;
        }
    }
    return out;
}

inline Dense dense_scalar(const Rational& f, std::size_t n)
{
    Dense out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        out[i][i] = f;
    }
    return out;
}

/// A point with small nonzero rational coordinates for every variable.
inline Point random_point(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    Point p;
    for (char v = 'a'; v <= 'z'; ++v) {
        int n = num(rng);
        p[v] = Rational(n == 0 ? 1 : n, den(rng));
        p[v].canonicalize();
    }
    return p;
}

/// phi*psi and psi*phi equal f*I at several random points.
inline bool factors_at_points(const PolyMatrix& phi, const PolyMatrix& psi, const Polynomial& f, std::mt19937_64& rng,
                              int points = 3)
{
    for (int k = 0; k < points; ++k) {
        const Point at = random_point(rng);
        const Dense a = eval(phi, at);
        const Dense b = eval(psi, at);
        const Dense want = dense_scalar(eval(f, at), phi.rows());
        if (dense_mul(a, b) != want || dense_mul(b, a) != want) {
            return false;
        }
    }
    return true;
}

// ---- dense index oracles ----

/// (A (x) B)[i*p + k][j*q + l] = A[i][j] * B[k][l], written from the definition.
inline PolyMatrix brute_kron(const PolyMatrix& a, const PolyMatrix& b)
{
    PolyMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

inline PolyMatrix unit_row(std::size_t i, std::size_t m)
{
    PolyMatrix e(1, m);
    e(0, i) = 1;
    return e;
}

inline PolyMatrix unit_col(std::size_t i, std::size_t m)
{
    PolyMatrix e(m, 1);
    e(i, 0) = 1;
    return e;
}

/// sum_i e_i^T (x) I_n (x) e_i with e_i the i-th unit column vector of length m.
inline PolyMatrix shuffle_from_formula(std::size_t m, std::size_t n)
{
    PolyMatrix sum(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i) {
        sum = sum + brute_kron(brute_kron(unit_row(i, m), PolyMatrix::identity(n)), unit_col(i, m));
    }
    return sum;
}

inline PolyMatrix transpose(const PolyMatrix& a)
{
    PolyMatrix t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            t(c, r) = a(r, c);
        }
    }
    return t;
}

/// Schoolbook matrix product, written independently of mat_mul.
inline PolyMatrix naive_mul(const PolyMatrix& a, const PolyMatrix& b)
{
    PolyMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Polynomial s;
            for (std::size_t t = 0; t < a.cols(); ++t) {
                s += a(i, t) * b(t, j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

// ---- generators ----

inline Monomial random_monomial(std::mt19937_64& rng, const std::string& vars = "xyz", unsigned max_deg = 3,
                                bool rational_coefficients = true)
{
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<std::size_t> var(0, vars.size() - 1);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, rational_coefficients ? 4 : 1);
    mfkit::Exponents e;
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) {
        const int v = vars[var(rng)] - 'a';
        e.set(v, e[v] + 1U);
    }
    int n = num(rng);
    Rational c(n == 0 ? 1 : n, den(rng));
    c.canonicalize();
    return {c, e};
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t max_terms = 3, const std::string& vars = "xyz",
                              unsigned max_deg = 3)
{
    std::uniform_int_distribution<std::size_t> count(0, max_terms);
    std::vector<Monomial> terms;
    const std::size_t n = count(rng);
    for (std::size_t k = 0; k < n; ++k) {
        terms.push_back(random_monomial(rng, vars, max_deg));
    }
    return Polynomial::from_terms(terms);
}

/// Distinct nonconstant monomials (so the standard method sees no merges).
inline std::vector<Monomial> random_distinct_monomials(std::mt19937_64& rng, std::size_t count,
                                                       const std::string& vars = "xyz", unsigned max_deg = 3)
{
    std::vector<Monomial> out;
    while (out.size() < count) {
        Monomial m = random_monomial(rng, vars, max_deg);
        if (m.exponents.is_constant()) {
            continue;
        }
        bool seen = false;
        for (const auto& o : out) {
            seen = seen || o.exponents == m.exponents;
        }
        if (!seen) {
            out.push_back(m);
        }
    }
    return out;
}

/// Standard-method factorization of a random polynomial with 1..max_terms
/// monomials; size at most 2^(max_terms-1).
inline mfkit::MatrixFactorization random_mf(std::mt19937_64& rng, std::size_t max_terms = 3,
                                            const std::string& vars = "xyz")
{
    std::uniform_int_distribution<std::size_t> count(1, max_terms);
    const auto terms = random_distinct_monomials(rng, count(rng), vars);
    return mfkit::standard_method(std::span<const Monomial>(terms));
}

/// Standard-method factorization of a random polynomial with exactly k monomials.
inline mfkit::MatrixFactorization random_mf_with_terms(std::mt19937_64& rng, std::size_t k,
                                                       const std::string& vars = "xyz")
{
    const auto terms = random_distinct_monomials(rng, k, vars);
    return mfkit::standard_method(std::span<const Monomial>(terms));
}

/// Closed-form log2 of the standard/improved size ratio: sum_j (prod_i p_ji - sum_i p_ji).
inline long closed_form_ratio_exp(const std::vector<std::vector<std::size_t>>& p)
{
    long e = 0;
    for (const auto& factors : p) {
        long prod = 1;
        long sum = 0;
        for (std::size_t q : factors) {
            prod *= static_cast<long>(q);
            sum += static_cast<long>(q);
        }
        e += prod - sum;
    }
    return e;
}

}  // namespace testing_support

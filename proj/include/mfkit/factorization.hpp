#pragma once

// Matrix factorizations (phi, psi) of a polynomial f, i.e. square matrices with
// phi*psi == psi*phi == f*I, plus the standard inductive construction that
// factors a sum of k monomials with matrices of size 2^(k-1).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mfkit/poly_matrix.hpp"
#include "mfkit/polynomial.hpp"

namespace mfkit {

enum class Product { PhiPsi, PsiPhi };

struct Mismatch {
    Product product;
    std::size_t row;
    std::size_t col;
    Polynomial expected;
    Polynomial actual;
};

struct VerifyReport {
    bool ok = true;
    std::optional<Mismatch> mismatch;  // first failing entry, row-major, phi*psi checked first

    [[nodiscard]] std::string to_string() const;
};

/// Recomputes both products and compares them with f*I entrywise.
/// Shape problems are reported as a mismatch at (0, 0) of phi*psi.
VerifyReport verify(const PolyMatrix& phi, const PolyMatrix& psi, const Polynomial& f);

class MatrixFactorization {
public:
    /// Verifying constructor. Throws SizeMismatch for non-square or unequal
    /// shapes, ZeroInput for f == 0, NotAFactorization (with the offending
    /// entry) when either product differs from f*I.
    static MatrixFactorization make(PolyMatrix phi, PolyMatrix psi, Polynomial f);

    /// Skips the product check in release builds. Only for callers whose
    /// construction is valid by proof; debug builds verify anyway.
    static MatrixFactorization unchecked(PolyMatrix phi, PolyMatrix psi, Polynomial f);

    [[nodiscard]] const Polynomial& target() const { return f_; }
    [[nodiscard]] std::size_t size() const { return phi_.rows(); }
    [[nodiscard]] const PolyMatrix& phi() const { return phi_; }
    [[nodiscard]] const PolyMatrix& psi() const { return psi_; }

    [[nodiscard]] VerifyReport verify() const { return mfkit::verify(phi_, psi_, f_); }

    friend bool operator==(const MatrixFactorization&, const MatrixFactorization&) = default;

private:
    MatrixFactorization(PolyMatrix phi, PolyMatrix psi, Polynomial f)
        : f_(std::move(f)), phi_(std::move(phi)), psi_(std::move(psi))
    {
    }

    Polynomial f_;
    PolyMatrix phi_;
    PolyMatrix psi_;
};

inline MatrixFactorization mf_new(PolyMatrix phi, PolyMatrix psi, Polynomial f)
{
    return MatrixFactorization::make(std::move(phi), std::move(psi), std::move(f));
}

/// ([g], [h]) as a 1x1 factorization of g*h.
MatrixFactorization one_by_one(const Polynomial& g, const Polynomial& h);

/// From X = (C, D) of f: ([C, -gI; hI, D], [D, gI; -hI, C]) of f + g*h.
MatrixFactorization add_summand(const MatrixFactorization& x, const Polynomial& g, const Polynomial& h);

/// From (C1, D1) of f1 and (C2, D2) of f2 with C1 D2 == D2 C1 and
/// C2 D1 == D1 C2: ([C1, -D2; C2, D1], [D1, D2; -C2, C1]) of f1 + f2.
MatrixFactorization combine_commuting(const MatrixFactorization& x1, const MatrixFactorization& x2);

using SplitPair = std::pair<Polynomial, Polynomial>;

/// Left fold: one_by_one on the first pair, then add_summand for the rest.
MatrixFactorization standard_method(std::span<const SplitPair> summands);

/// Splits each monomial with leading_split and runs the standard method in
/// the given order.
MatrixFactorization standard_method(std::span<const Monomial> monomials);

/// (phi1 (+) phi2, psi1 (+) psi2); both must factor the same f.
MatrixFactorization mf_direct_sum(const MatrixFactorization& x1, const MatrixFactorization& x2);

}  // namespace mfkit

#pragma once

// Tensor products of matrix factorizations, morphisms between factorizations,
// and permutation witnesses relating differently bracketed products.
//
// Notation: X = (phi, psi) of f with size n, Y = (phi', psi') of g with size m.

#include <array>
#include <cstddef>
#include <string>

#include "mfkit/factorization.hpp"
#include "mfkit/poly_matrix.hpp"

namespace mfkit {

/// Additive (Yoshino) tensor product and its three block-rotated variants.
/// Result factors f + g with size 2nm. Throws InvalidVariant unless
/// 0 <= variant <= 3.
///
///   0: [phi(x)1, 1(x)phi'; -1(x)psi', psi(x)1]   [psi(x)1, -1(x)phi'; 1(x)psi', phi(x)1]
///   1: [1(x)phi', psi(x)1; phi(x)1, -1(x)psi']   [1(x)psi', psi(x)1; phi(x)1, -1(x)phi']
///   2: [psi(x)1, -1(x)psi'; 1(x)phi', phi(x)1]   [phi(x)1, 1(x)psi'; -1(x)phi', psi(x)1]
///   3: [-1(x)psi', phi(x)1; psi(x)1, 1(x)phi']   [-1(x)phi', phi(x)1; psi(x)1, 1(x)psi']
MatrixFactorization yoshino(const MatrixFactorization& x, const MatrixFactorization& y, int variant = 0);

/// yoshino with variant k in {1, 2, 3}.
MatrixFactorization yoshino_variant(const MatrixFactorization& x, const MatrixFactorization& y, int k);

/// Multiplicative tensor product, result factors f*g with size 2nm.
///   0: (diag(phi(x)phi', phi(x)phi'), diag(psi(x)psi', psi(x)psi'))
///   1: anti-diagonal [0, T; T, 0] with T = phi(x)phi' (resp. psi(x)psi')
MatrixFactorization mult_tensor(const MatrixFactorization& x, const MatrixFactorization& y, int variant = 0);

inline MatrixFactorization mult_tensor_variant(const MatrixFactorization& x, const MatrixFactorization& y)
{
    return mult_tensor(x, y, 1);
}

/// A pair (alpha, beta) of n2 x n1 matrices with alpha*phi1 == phi2*beta and
/// psi2*alpha == beta*psi1, between factorizations of the same f.
class Morphism {
public:
    /// Throws TargetMismatch, DimensionMismatch, or NotAMorphism naming the
    /// failing condition and entry.
    static Morphism make(MatrixFactorization source, MatrixFactorization dest, PolyMatrix alpha, PolyMatrix beta);

    [[nodiscard]] const MatrixFactorization& source() const { return source_; }
    [[nodiscard]] const MatrixFactorization& dest() const { return dest_; }
    [[nodiscard]] const PolyMatrix& alpha() const { return alpha_; }
    [[nodiscard]] const PolyMatrix& beta() const { return beta_; }

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    Morphism(MatrixFactorization source, MatrixFactorization dest, PolyMatrix alpha, PolyMatrix beta)
        : source_(std::move(source)), dest_(std::move(dest)), alpha_(std::move(alpha)), beta_(std::move(beta))
    {
    }

    MatrixFactorization source_;
    MatrixFactorization dest_;
    PolyMatrix alpha_;
    PolyMatrix beta_;
};

inline Morphism morph_new(MatrixFactorization source, MatrixFactorization dest, PolyMatrix alpha, PolyMatrix beta)
{
    return Morphism::make(std::move(source), std::move(dest), std::move(alpha), std::move(beta));
}

Morphism morph_identity(const MatrixFactorization& x);

/// m2 after m1. Throws ChainMismatch unless m1.dest() == m2.source().
Morphism morph_compose(const Morphism& m2, const Morphism& m1);

/// (diag(af(x)ag, af(x)ag), diag(bf(x)bg, bf(x)bg)) from X_f (x) X_g to
/// X_f' (x) X_g', for either multiplicative form.
Morphism morph_mult_tensor(const Morphism& mf, const Morphism& mg, int variant = 0);

enum class MorphPart { Alpha, Beta };

/// Which of alpha/beta (tensored with I_m) sits in each diagonal block of the
/// lifted alpha and beta: A = diag(a[0](x)1, a[1](x)1), B = diag(b[0](x)1, b[1](x)1).
struct Placement {
    std::array<MorphPart, 2> a;
    std::array<MorphPart, 2> b;

    friend bool operator==(const Placement&, const Placement&) = default;
    [[nodiscard]] std::string to_string() const;
};

/// All 16 placements in search order. The first is (alpha, alpha | beta, beta);
/// the rest follow in lexicographic order with Alpha < Beta.
std::array<Placement, 16> placement_candidates();

struct LiftedMorphism {
    Morphism morphism;
    Placement placement;
};

/// Lifts mf: X_f -> X_f' to X_f (^) Y -> X_f' (^) Y for the given additive
/// variant. Candidate placements are tried in placement_candidates() order and
/// the first one passing the morphism check is returned; throws
/// NoValidPlacement if none does.
LiftedMorphism morph_yoshino_left(const Morphism& mf, const MatrixFactorization& y, int variant);

/// I_2 (x) S_{n,m}: conjugating X (x) Y by it gives Y (x) X (phi and psi).
Permutation commutativity_witness(const MatrixFactorization& x, const MatrixFactorization& y, int variant = 0);

struct AssociativityReport {
    bool exact_equal = false;
    /// Conjugating (X (x) Y) (x) Z by this gives X (x) (Y (x) Z).
    Permutation witness;
    MatrixFactorization left;
    MatrixFactorization right;
};

AssociativityReport associativity_check(const MatrixFactorization& x, const MatrixFactorization& y,
                                        const MatrixFactorization& z, int variant = 0);

enum class DistSide { Left, Right };

/// Left: conjugating (X1 (+) X2) (x) Y gives (X1 (x) Y) (+) (X2 (x) Y).
/// Right: conjugating Y (x) (X1 (+) X2) gives (Y (x) X1) (+) (Y (x) X2).
/// X1 and X2 must have the same size and target.
Permutation distributivity_witness(const MatrixFactorization& x1, const MatrixFactorization& x2,
                                   const MatrixFactorization& y, DistSide side, int variant = 0);

/// True when conjugate(p, a.phi()) == b.phi() and likewise for psi.
bool is_permutation_similar(const Permutation& p, const MatrixFactorization& a, const MatrixFactorization& b);

}  // namespace mfkit

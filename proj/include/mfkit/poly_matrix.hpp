#pragma once

// Dense matrices over Polynomial and the permutation matrices used to relate
// Kronecker products (commutation / perfect-shuffle matrices).
//
// Indices are 0-based and storage is row-major.

#include <cstddef>
#include <string>
#include <vector>

#include "mfkit/polynomial.hpp"

namespace mfkit {

class PolyMatrix {
public:
    PolyMatrix() = default;
    /// rows x cols zero matrix.
    PolyMatrix(std::size_t rows, std::size_t cols);
    /// Row-major literal; throws DimensionMismatch on ragged input.
    PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows);

    static PolyMatrix identity(std::size_t n);
    static PolyMatrix scalar(const Polynomial& f, std::size_t n);
    static PolyMatrix from_rows(const std::vector<std::vector<Polynomial>>& rows);
    /// [[a, b], [c, d]] assembled from blocks whose shapes must line up.
    static PolyMatrix blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] PolyMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

    /// Text rendering: one line per row, entries separated by commas.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    PolyMatrix& operator+=(const PolyMatrix& other);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(const PolyMatrix& a);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }
    friend PolyMatrix operator*(const Polynomial& s, const PolyMatrix& a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> entries_;
};

/// Exact product; throws DimensionMismatch unless a.cols() == b.rows().
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
inline PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return mat_mul(a, b); }

/// Kronecker product: each entry a_ij replaced by the block a_ij * B.
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

/// Block-diagonal [[A, 0], [0, B]].
PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);

inline PolyMatrix identity(std::size_t n) { return PolyMatrix::identity(n); }
inline PolyMatrix scalar_mat(const Polynomial& f, std::size_t n) { return PolyMatrix::scalar(f, n); }

/// Permutation matrix stored as an index map: row i has its single 1 in
/// column image[i].
class Permutation {
public:
    Permutation() = default;
    /// Throws DimensionMismatch unless `image` is a bijection on 0..n-1.
    explicit Permutation(std::vector<std::size_t> image);

    static Permutation identity(std::size_t n);

    [[nodiscard]] std::size_t size() const { return image_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& image() const { return image_; }
    [[nodiscard]] bool is_identity() const;

    [[nodiscard]] Permutation transpose() const;
    [[nodiscard]] PolyMatrix to_matrix() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> image_;
};

/// The perfect shuffle S_{m,n} = sum_i e_i^T (x) I_n (x) e_i (e_i in K^m).
/// For square A (m x m) and B (n x n): S (A (x) B) S^T == B (x) A.
Permutation perfect_shuffle(std::size_t m, std::size_t n);

/// Kronecker product of permutation matrices, again a permutation.
Permutation kron(const Permutation& p, const Permutation& q);

enum class Side { Left, Right };

/// Left: P*A. Right: A*P. Never materialises P.
PolyMatrix apply_perm(const Permutation& p, const PolyMatrix& a, Side side);

/// P * A * P^T.
PolyMatrix conjugate(const Permutation& p, const PolyMatrix& a);

}  // namespace mfkit

#include "mfkit/poly_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

std::string shape(const PolyMatrix& a)
{
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows)
{
    std::vector<std::vector<Polynomial>> v;
    for (const auto& r : rows) {
        v.emplace_back(r);
    }
    *this = from_rows(v);
}

PolyMatrix PolyMatrix::identity(std::size_t n)
{
    return scalar(Polynomial(1), n);
}

PolyMatrix PolyMatrix::scalar(const Polynomial& f, std::size_t n)
{
    PolyMatrix m(n, n);
    if (!f.is_zero()) {
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = f;
        }
    }
    return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Polynomial>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    PolyMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw Error(ErrorCode::DimensionMismatch,
                        "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(cols));
        }
        std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
}

PolyMatrix PolyMatrix::blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d)
{
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "block shapes do not line up: " + shape(a) + ", " + shape(b) + ", " +
                                                      shape(c) + ", " + shape(d));
    }
    PolyMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
    auto place = [&m](const PolyMatrix& blk, std::size_t r0, std::size_t c0) {
        for (std::size_t i = 0; i < blk.rows(); ++i) {
            for (std::size_t j = 0; j < blk.cols(); ++j) {
                m(r0 + i, c0 + j) = blk(i, j);
            }
        }
    };
    place(a, 0, 0);
    place(b, 0, a.cols());
    place(c, a.rows(), 0);
    place(d, a.rows(), a.cols());
    return m;
}

PolyMatrix PolyMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const
{
    if (row0 + rows > rows_ || col0 + cols > cols_) {
        throw Error(ErrorCode::DimensionMismatch, "block out of range for " + shape(*this));
    }
    PolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = (*this)(row0 + i, col0 + j);
        }
    }
    return m;
}

std::string PolyMatrix::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) {
                out += ',';
            }
            out += (*this)(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorCode::DimensionMismatch, "cannot add " + shape(*this) + " and " + shape(other));
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

PolyMatrix operator-(const PolyMatrix& a)
{
    PolyMatrix r = a;
    for (auto& e : r.entries_) {
        e = -e;
    }
    return r;
}

PolyMatrix operator*(const Polynomial& s, const PolyMatrix& a)
{
    PolyMatrix r(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        r.entries_[k] = s * a.entries_[k];
    }
    return r;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
    }
    // Row-wise sparse product: for each row of A, scatter the nonzero pairs
    // a_ik * b_kj into per-column buckets, then canonicalise each bucket once.
    std::vector<std::vector<std::size_t>> b_nonzero(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (!b(k, j).is_zero()) {
                b_nonzero[k].push_back(j);
            }
        }
    }
    PolyMatrix r(a.rows(), b.cols());
    std::vector<std::vector<std::pair<const Polynomial*, const Polynomial*>>> buckets(b.cols());
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        touched.clear();
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Polynomial& x = a(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j : b_nonzero[k]) {
                if (buckets[j].empty()) {
                    touched.push_back(j);
                }
                buckets[j].emplace_back(&x, &b(k, j));
            }
        }
        for (std::size_t j : touched) {
            r(i, j) = sum_of_products(buckets[j]);
            buckets[j].clear();
        }
    }
    return r;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b)
{
    PolyMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Polynomial& s = a(i, j);
            if (s.is_zero()) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    if (!b(k, l).is_zero()) {
                        r(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
                    }
                }
            }
        }
    }
    return r;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b)
{
    return PolyMatrix::blocks(a, PolyMatrix(a.rows(), b.cols()), PolyMatrix(b.rows(), a.cols()), b);
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image))
{
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
        if (v >= image_.size() || seen[v]) {
            throw Error(ErrorCode::DimensionMismatch, "permutation image is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != i) {
            return false;
        }
    }
    return true;
}

Permutation Permutation::transpose() const
{
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        inv[image_[i]] = i;
    }
    return Permutation(std::move(inv));
}

PolyMatrix Permutation::to_matrix() const
{
    PolyMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) {
        m(i, image_[i]) = Polynomial(1);
    }
    return m;
}

Permutation perfect_shuffle(std::size_t m, std::size_t n)
{
    // Row j*m + i carries its 1 in column i*n + j.
    std::vector<std::size_t> image(m * n);
    for (std::size_t r = 0; r < m * n; ++r) {
        const std::size_t j = r / m;
        const std::size_t i = r % m;
        image[r] = i * n + j;
    }
    return Permutation(std::move(image));
}

Permutation kron(const Permutation& p, const Permutation& q)
{
    std::vector<std::size_t> image(p.size() * q.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t k = 0; k < q.size(); ++k) {
            image[i * q.size() + k] = p.image()[i] * q.size() + q.image()[k];
        }
    }
    return Permutation(std::move(image));
}

PolyMatrix apply_perm(const Permutation& p, const PolyMatrix& a, Side side)
{
    const auto& image = p.image();
    if (side == Side::Left) {
        if (p.size() != a.rows()) {
            throw Error(ErrorCode::DimensionMismatch, "permutation of size " + std::to_string(p.size()) +
                                                          " cannot act on the rows of " + shape(a));
        }
        PolyMatrix r(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                r(i, j) = a(image[i], j);
            }
        }
        return r;
    }
    if (p.size() != a.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "permutation of size " + std::to_string(p.size()) +
                                                      " cannot act on the columns of " + shape(a));
    }
    // (A P)_{ij} = A_{i k} where image[k] == j.
    const Permutation inv = p.transpose();
    PolyMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = a(i, inv.image()[j]);
        }
    }
    return r;
}

PolyMatrix conjugate(const Permutation& p, const PolyMatrix& a)
{
    if (!a.is_square() || p.size() != a.rows()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "cannot conjugate " + shape(a) + " by a permutation of size " + std::to_string(p.size()));
    }
    const auto& image = p.image();
    PolyMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = a(image[i], image[j]);
        }
    }
    return r;
}

}  // namespace mfkit

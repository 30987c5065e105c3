#include "mfkit/factorization.hpp"

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

const char* product_name(Product p)
{
    return p == Product::PhiPsi ? "phi*psi" : "psi*phi";
}

std::optional<Mismatch> first_mismatch(const PolyMatrix& product, const Polynomial& f, Product which)
{
    for (std::size_t i = 0; i < product.rows(); ++i) {
        for (std::size_t j = 0; j < product.cols(); ++j) {
            const Polynomial expected = i == j ? f : Polynomial{};
            if (product(i, j) != expected) {
                return Mismatch{which, i, j, expected, product(i, j)};
            }
        }
    }
    return std::nullopt;
}

void check_shapes(const PolyMatrix& phi, const PolyMatrix& psi)
{
    if (!phi.is_square() || !psi.is_square() || phi.rows() != psi.rows()) {
        throw Error(ErrorCode::SizeMismatch, "phi and psi must be square of equal size, got " +
                                                 std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
                                                 " and " + std::to_string(psi.rows()) + "x" +
                                                 std::to_string(psi.cols()));
    }
    if (phi.rows() == 0) {
        throw Error(ErrorCode::SizeMismatch, "a factorization has size at least 1");
    }
}

}  // namespace

std::string VerifyReport::to_string() const
{
    if (ok) {
        return "ok";
    }
    if (!mismatch) {
        return "failed";
    }
    const auto& m = *mismatch;
    return std::string(product_name(m.product)) + " differs from f*I at (" + std::to_string(m.row) + "," +
           std::to_string(m.col) + "): expected " + m.expected.to_string() + ", got " + m.actual.to_string();
}

VerifyReport verify(const PolyMatrix& phi, const PolyMatrix& psi, const Polynomial& f)
{
    if (!phi.is_square() || !psi.is_square() || phi.rows() != psi.rows() || phi.rows() == 0) {
        return {false, Mismatch{Product::PhiPsi, 0, 0, f, Polynomial{}}};
    }
    if (auto m = first_mismatch(mat_mul(phi, psi), f, Product::PhiPsi)) {
        return {false, std::move(m)};
    }
    if (auto m = first_mismatch(mat_mul(psi, phi), f, Product::PsiPhi)) {
        return {false, std::move(m)};
    }
    return {};
}

MatrixFactorization MatrixFactorization::make(PolyMatrix phi, PolyMatrix psi, Polynomial f)
{
    check_shapes(phi, psi);
    if (f.is_zero()) {
        throw Error(ErrorCode::ZeroInput, "cannot factor the zero polynomial");
    }
    const VerifyReport report = mfkit::verify(phi, psi, f);
    if (!report.ok) {
        const auto& m = *report.mismatch;
        throw Error(ErrorCode::NotAFactorization, "not a matrix factorization of " + f.to_string() + ": " +
                                                      report.to_string(),
                    Location{m.row, m.col});
    }
    return {std::move(phi), std::move(psi), std::move(f)};
}

MatrixFactorization MatrixFactorization::unchecked(PolyMatrix phi, PolyMatrix psi, Polynomial f)
{
#ifndef NDEBUG
    return make(std::move(phi), std::move(psi), std::move(f));
#else
    check_shapes(phi, psi);
    return {std::move(phi), std::move(psi), std::move(f)};
#endif
}

MatrixFactorization one_by_one(const Polynomial& g, const Polynomial& h)
{
    if (g.is_zero() || h.is_zero()) {
        throw Error(ErrorCode::ZeroInput, "one_by_one needs nonzero factors");
    }
    return MatrixFactorization::make(PolyMatrix{{g}}, PolyMatrix{{h}}, g * h);
}

MatrixFactorization add_summand(const MatrixFactorization& x, const Polynomial& g, const Polynomial& h)
{
    Polynomial gh = g * h;
    if (gh.is_zero()) {
        throw Error(ErrorCode::ZeroInput, "add_summand needs a nonzero summand g*h");
    }
    const std::size_t n = x.size();
    const PolyMatrix gi = PolyMatrix::scalar(g, n);
    const PolyMatrix hi = PolyMatrix::scalar(h, n);
    return MatrixFactorization::make(PolyMatrix::blocks(x.phi(), -gi, hi, x.psi()),
                                     PolyMatrix::blocks(x.psi(), gi, -hi, x.phi()), x.target() + gh);
}

MatrixFactorization combine_commuting(const MatrixFactorization& x1, const MatrixFactorization& x2)
{
    if (x1.size() != x2.size()) {
        throw Error(ErrorCode::SizeMismatch, "combine_commuting needs factorizations of equal size, got " +
                                                 std::to_string(x1.size()) + " and " + std::to_string(x2.size()));
    }
    const PolyMatrix& c1 = x1.phi();
    const PolyMatrix& d1 = x1.psi();
    const PolyMatrix& c2 = x2.phi();
    const PolyMatrix& d2 = x2.psi();
    if (c1 * d2 != d2 * c1) {
        throw Error(ErrorCode::CommutationFailure, "C1 and D2 do not commute");
    }
    if (c2 * d1 != d1 * c2) {
        throw Error(ErrorCode::CommutationFailure, "C2 and D1 do not commute");
    }
    return MatrixFactorization::make(PolyMatrix::blocks(c1, -d2, c2, d1), PolyMatrix::blocks(d1, d2, -c2, c1),
                                     x1.target() + x2.target());
}

MatrixFactorization standard_method(std::span<const SplitPair> summands)
{
    if (summands.empty()) {
        throw Error(ErrorCode::EmptyInput, "standard method needs at least one summand");
    }
    MatrixFactorization x = one_by_one(summands.front().first, summands.front().second);
    for (const auto& [g, h] : summands.subspan(1)) {
        x = add_summand(x, g, h);
    }
    return x;
}

MatrixFactorization standard_method(std::span<const Monomial> monomials)
{
    std::vector<SplitPair> pairs;
    pairs.reserve(monomials.size());
    for (const auto& m : monomials) {
        auto [g, h] = leading_split(m);
        pairs.emplace_back(Polynomial(g), Polynomial(h));
    }
    return standard_method(std::span<const SplitPair>(pairs));
}

MatrixFactorization mf_direct_sum(const MatrixFactorization& x1, const MatrixFactorization& x2)
{
    if (x1.target() != x2.target()) {
        throw Error(ErrorCode::TargetMismatch, "direct sum needs the same target, got " + x1.target().to_string() +
                                                   " and " + x2.target().to_string());
    }
    return MatrixFactorization::make(direct_sum(x1.phi(), x2.phi()), direct_sum(x1.psi(), x2.psi()), x1.target());
}

}  // namespace mfkit

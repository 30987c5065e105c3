#include "mfkit/tensor_ops.hpp"

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

void check_yoshino_variant(int variant)
{
    if (variant < 0 || variant > 3) {
        throw Error(ErrorCode::InvalidVariant, "additive tensor variant must be 0..3, got " + std::to_string(variant));
    }
}

void check_mult_variant(int variant)
{
    if (variant != 0 && variant != 1) {
        throw Error(ErrorCode::InvalidVariant,
                    "multiplicative tensor variant must be 0 or 1, got " + std::to_string(variant));
    }
}

// diag(t, t) or [0, t; t, 0].
PolyMatrix doubled(const PolyMatrix& t, int variant)
{
    const PolyMatrix zero(t.rows(), t.cols());
    return variant == 0 ? PolyMatrix::blocks(t, zero, zero, t) : PolyMatrix::blocks(zero, t, t, zero);
}

MatrixFactorization construct_checked(PolyMatrix phi, PolyMatrix psi, Polynomial f, const char* what)
{
    try {
        return MatrixFactorization::make(std::move(phi), std::move(psi), std::move(f));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotAFactorization) {
            throw Error(ErrorCode::Internal, std::string(what) + " failed verification: " + e.what(), e.where());
        }
        throw;
    }
}

std::optional<Location> first_difference(const PolyMatrix& a, const PolyMatrix& b)
{
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) != b(i, j)) {
                return Location{i, j};
            }
        }
    }
    return std::nullopt;
}

PolyMatrix pick(MorphPart f, const Morphism& m)
{
    return f == MorphPart::Alpha ? m.alpha() : m.beta();
}

const char* factor_name(MorphPart f)
{
    return f == MorphPart::Alpha ? "alpha" : "beta";
}

Permutation checked_witness(Permutation p, const MatrixFactorization& from, const MatrixFactorization& to,
                            const char* what)
{
    if (p.size() != from.size() || from.size() != to.size() || !is_permutation_similar(p, from, to)) {
        throw Error(ErrorCode::WitnessNotFound, std::string("no permutation witness for ") + what);
    }
    return p;
}

}  // namespace

MatrixFactorization yoshino(const MatrixFactorization& x, const MatrixFactorization& y, int variant)
{
    check_yoshino_variant(variant);
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    const PolyMatrix phi1 = kron(x.phi(), identity(m));
    const PolyMatrix psi1 = kron(x.psi(), identity(m));
    const PolyMatrix phi2 = kron(identity(n), y.phi());
    const PolyMatrix psi2 = kron(identity(n), y.psi());

    PolyMatrix phi;
    PolyMatrix psi;
    switch (variant) {
    case 0:
        phi = PolyMatrix::blocks(phi1, phi2, -psi2, psi1);
        psi = PolyMatrix::blocks(psi1, -phi2, psi2, phi1);
        break;
    case 1:
        phi = PolyMatrix::blocks(phi2, psi1, phi1, -psi2);
        psi = PolyMatrix::blocks(psi2, psi1, phi1, -phi2);
        break;
    case 2:
        phi = PolyMatrix::blocks(psi1, -psi2, phi2, phi1);
        psi = PolyMatrix::blocks(phi1, psi2, -phi2, psi1);
        break;
    default:
        phi = PolyMatrix::blocks(-psi2, phi1, psi1, phi2);
        psi = PolyMatrix::blocks(-phi2, phi1, psi1, psi2);
        break;
    }
    return construct_checked(std::move(phi), std::move(psi), x.target() + y.target(), "additive tensor product");
}

MatrixFactorization yoshino_variant(const MatrixFactorization& x, const MatrixFactorization& y, int k)
{
    if (k < 1 || k > 3) {
        throw Error(ErrorCode::InvalidVariant, "additive tensor variant index must be 1..3, got " + std::to_string(k));
    }
    return yoshino(x, y, k);
}

MatrixFactorization mult_tensor(const MatrixFactorization& x, const MatrixFactorization& y, int variant)
{
    check_mult_variant(variant);
    return construct_checked(doubled(kron(x.phi(), y.phi()), variant), doubled(kron(x.psi(), y.psi()), variant),
                             x.target() * y.target(), "multiplicative tensor product");
}

Morphism Morphism::make(MatrixFactorization source, MatrixFactorization dest, PolyMatrix alpha, PolyMatrix beta)
{
    if (source.target() != dest.target()) {
        throw Error(ErrorCode::TargetMismatch, "morphism ends factor different polynomials: " +
                                                   source.target().to_string() + " and " +
                                                   dest.target().to_string());
    }
    const std::size_t n1 = source.size();
    const std::size_t n2 = dest.size();
    for (const PolyMatrix* m : {&alpha, &beta}) {
        if (m->rows() != n2 || m->cols() != n1) {
            throw Error(ErrorCode::DimensionMismatch, "morphism matrices must be " + std::to_string(n2) + "x" +
                                                          std::to_string(n1) + ", got " + std::to_string(m->rows()) +
                                                          "x" + std::to_string(m->cols()));
        }
    }
    if (auto at = first_difference(alpha * source.phi(), dest.phi() * beta)) {
        throw Error(ErrorCode::NotAMorphism, "alpha*phi1 != phi2*beta at (" + std::to_string(at->row) + "," +
                                                 std::to_string(at->col) + ")",
                    at);
    }
    if (auto at = first_difference(dest.psi() * alpha, beta * source.psi())) {
        throw Error(ErrorCode::NotAMorphism, "psi2*alpha != beta*psi1 at (" + std::to_string(at->row) + "," +
                                                 std::to_string(at->col) + ")",
                    at);
    }
    return {std::move(source), std::move(dest), std::move(alpha), std::move(beta)};
}

Morphism morph_identity(const MatrixFactorization& x)
{
    return Morphism::make(x, x, identity(x.size()), identity(x.size()));
}

Morphism morph_compose(const Morphism& m2, const Morphism& m1)
{
    if (!(m1.dest() == m2.source())) {
        throw Error(ErrorCode::ChainMismatch, "cannot compose: first morphism's destination is not the second's source");
    }
    return Morphism::make(m1.source(), m2.dest(), m2.alpha() * m1.alpha(), m2.beta() * m1.beta());
}

Morphism morph_mult_tensor(const Morphism& mf, const Morphism& mg, int variant)
{
    check_mult_variant(variant);
    const PolyMatrix a = kron(mf.alpha(), mg.alpha());
    const PolyMatrix b = kron(mf.beta(), mg.beta());
    return Morphism::make(mult_tensor(mf.source(), mg.source(), variant),
                          mult_tensor(mf.dest(), mg.dest(), variant), direct_sum(a, a), direct_sum(b, b));
}

std::string Placement::to_string() const
{
    return std::string("A=diag(") + factor_name(a[0]) + "," + factor_name(a[1]) + ") B=diag(" + factor_name(b[0]) +
           "," + factor_name(b[1]) + ")";
}

std::array<Placement, 16> placement_candidates()
{
    const Placement first{{MorphPart::Alpha, MorphPart::Alpha}, {MorphPart::Beta, MorphPart::Beta}};
    std::array<Placement, 16> out;
    out[0] = first;
    std::size_t k = 1;
    for (unsigned bits = 0; bits < 16; ++bits) {
        auto f = [bits](unsigned bit) { return (bits >> (3 - bit)) & 1U ? MorphPart::Beta : MorphPart::Alpha; };
        const Placement p{{f(0), f(1)}, {f(2), f(3)}};
        if (!(p == first)) {
            out[k++] = p;
        }
    }
    return out;
}

LiftedMorphism morph_yoshino_left(const Morphism& mf, const MatrixFactorization& y, int variant)
{
    check_yoshino_variant(variant);
    const MatrixFactorization source = yoshino(mf.source(), y, variant);
    const MatrixFactorization dest = yoshino(mf.dest(), y, variant);
    const PolyMatrix im = identity(y.size());
    for (const Placement& p : placement_candidates()) {
        PolyMatrix a = direct_sum(kron(pick(p.a[0], mf), im), kron(pick(p.a[1], mf), im));
        PolyMatrix b = direct_sum(kron(pick(p.b[0], mf), im), kron(pick(p.b[1], mf), im));
        try {
            return {Morphism::make(source, dest, std::move(a), std::move(b)), p};
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotAMorphism) {
                throw;
            }
        }
    }
    throw Error(ErrorCode::NoValidPlacement,
                "no diagonal placement of alpha and beta lifts the morphism through additive variant " +
                    std::to_string(variant));
}

bool is_permutation_similar(const Permutation& p, const MatrixFactorization& a, const MatrixFactorization& b)
{
    return p.size() == a.size() && a.size() == b.size() && conjugate(p, a.phi()) == b.phi() &&
           conjugate(p, a.psi()) == b.psi();
}

Permutation commutativity_witness(const MatrixFactorization& x, const MatrixFactorization& y, int variant)
{
    const MatrixFactorization xy = mult_tensor(x, y, variant);
    const MatrixFactorization yx = mult_tensor(y, x, variant);
    return checked_witness(kron(Permutation::identity(2), perfect_shuffle(x.size(), y.size())), xy, yx,
                           "commutativity");
}

AssociativityReport associativity_check(const MatrixFactorization& x, const MatrixFactorization& y,
                                        const MatrixFactorization& z, int variant)
{
    MatrixFactorization left = mult_tensor(mult_tensor(x, y, variant), z, variant);
    MatrixFactorization right = mult_tensor(x, mult_tensor(y, z, variant), variant);
    // left = I2 (x) I2 (x) phi (x) Q and right = I2 (x) phi (x) I2 (x) Q with
    // Q = phi' (x) phi'' (J in place of I2 for the anti-diagonal form).
    const Permutation p = kron(kron(Permutation::identity(2), perfect_shuffle(2, x.size())),
                               Permutation::identity(y.size() * z.size()));
    Permutation witness = checked_witness(p, left, right, "associativity");
    const bool exact = left == right;
    return {exact, std::move(witness), std::move(left), std::move(right)};
}

Permutation distributivity_witness(const MatrixFactorization& x1, const MatrixFactorization& x2,
                                   const MatrixFactorization& y, DistSide side, int variant)
{
    if (x1.size() != x2.size()) {
        throw Error(ErrorCode::SizeMismatch, "distributivity needs summands of equal size, got " +
                                                 std::to_string(x1.size()) + " and " + std::to_string(x2.size()));
    }
    const MatrixFactorization sum = mf_direct_sum(x1, x2);
    const std::size_t n = x1.size();
    const std::size_t p = y.size();
    const std::size_t block = n * p;
    std::vector<std::size_t> image(4 * block);

    if (side == DistSide::Left) {
        // diag(B1, B2, B1, B2) -> diag(B1, B1, B2, B2): swap the middle blocks.
        const std::array<std::size_t, 4> from{0, 2, 1, 3};
        for (std::size_t t = 0; t < image.size(); ++t) {
            image[t] = from[t / block] * block + t % block;
        }
        return checked_witness(Permutation(std::move(image)), mult_tensor(sum, y, variant),
                               mf_direct_sum(mult_tensor(x1, y, variant), mult_tensor(x2, y, variant)),
                               "left distributivity");
    }
    // Target block q is copy q % 2 of Y (x) X_{q / 2 + 1}; row (a, d) of that block
    // reads row a*2n + d (+ n for X2) inside copy q % 2 of Y (x) (X1 (+) X2).
    for (std::size_t t = 0; t < image.size(); ++t) {
        const std::size_t q = t / block;
        const std::size_t r = t % block;
        const std::size_t a = r / n;
        const std::size_t d = r % n + (q >= 2 ? n : 0);
        const std::size_t copy = q % 2;
        image[t] = copy * 2 * block + a * 2 * n + d;
    }
    return checked_witness(Permutation(std::move(image)), mult_tensor(y, sum, variant),
                           mf_direct_sum(mult_tensor(y, x1, variant), mult_tensor(y, x2, variant)),
                           "right distributivity");
}

}  // namespace mfkit

#include "mfkit/reducer.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include <json.hpp>

#include "mfkit/error.hpp"
#include "mfkit/tensor_ops.hpp"

namespace mfkit {

namespace {

MatrixFactorization factor_product(const ProductTerm& term, int mult_variant)
{
    MatrixFactorization acc = standard_method(std::span<const Monomial>(term.factors.front()));
    for (std::size_t i = 1; i < term.factors.size(); ++i) {
        acc = mult_tensor(acc, standard_method(std::span<const Monomial>(term.factors[i])), mult_variant);
    }
    return acc;
}

// Replaces product terms that are cheaper to factor expanded by a single
// parenthesised factor holding the written-order expansion.
SummandForm apply_auto_expand(const SummandForm& sf)
{
    SummandForm out;
    for (const auto& t : sf.terms) {
        const auto* p = std::get_if<ProductTerm>(&t);
        if (p == nullptr || p->factors.size() < 2) {
            out.terms.push_back(t);
            continue;
        }
        std::size_t sum = 0;
        for (const auto& f : p->factors) {
            sum += f.size();
        }
        WrittenSum expanded = expand_written(SummandForm{{t}});
        if (!expanded.empty() && expanded.size() < sum) {
            out.terms.push_back(ProductTerm{{std::move(expanded)}});
        } else {
            out.terms.push_back(t);
        }
    }
    return out;
}

nlohmann::json size_json(long e)
{
    if (e >= 0 && e < 63) {
        return std::uint64_t{1} << e;
    }
    return pow2_string(e);
}

// Monomials of total degree 1..max_deg in the given variables.
std::size_t monomial_space(std::size_t vars, unsigned max_deg)
{
    // C(vars + max_deg, max_deg) - 1, saturating.
    long double c = 1;
    for (unsigned k = 1; k <= max_deg; ++k) {
        c = c * static_cast<long double>(vars + k) / k;
        if (c > 1e12L) {
            return static_cast<std::size_t>(1e12);
        }
    }
    return static_cast<std::size_t>(c + 0.5L) - 1;
}

class InstanceBuilder {
public:
    InstanceBuilder(std::uint64_t seed, const Shape& shape) : rng_(seed), shape_(shape) {}

    Monomial random_monomial()
    {
        std::uniform_int_distribution<unsigned> deg_dist(1, shape_.max_deg);
        std::uniform_int_distribution<std::size_t> var_dist(0, shape_.vars.size() - 1);
        std::bernoulli_distribution sign;
        const unsigned deg = deg_dist(rng_);
        Exponents e;
        for (unsigned k = 0; k < deg; ++k) {
            const int v = shape_.vars[var_dist(rng_)] - 'a';
            e.set(v, e[v] + 1U);
        }
        return {Rational(sign(rng_) ? -1 : 1), e};
    }

    WrittenSum distinct_monomials(std::size_t count)
    {
        WrittenSum out;
        while (out.size() < count) {
            Monomial m = random_monomial();
            const bool seen = std::any_of(out.begin(), out.end(),
                                          [&](const Monomial& o) { return o.exponents == m.exponents; });
            if (!seen) {
                out.push_back(std::move(m));
            }
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
    const Shape& shape_;
};

void validate(const Shape& shape)
{
    auto infeasible = [](const std::string& why) { throw Error(ErrorCode::InfeasibleShape, why); };
    if (shape.s == 0 && shape.p.empty()) {
        infeasible("shape has no terms");
    }
    if (shape.vars.empty()) {
        infeasible("no variables");
    }
    std::set<char> seen;
    for (char v : shape.vars) {
        if (v < 'a' || v > 'z' || !seen.insert(v).second) {
            infeasible("variables must be distinct lowercase letters");
        }
    }
    if (shape.max_deg == 0) {
        infeasible("max degree must be at least 1");
    }
    const std::size_t space = monomial_space(shape.vars.size(), shape.max_deg);
    if (shape.s > space) {
        infeasible(std::to_string(shape.s) + " distinct monomial terms requested but only " + std::to_string(space) +
                   " monomials exist");
    }
    for (const auto& factors : shape.p) {
        if (factors.empty()) {
            infeasible("every product needs at least one factor");
        }
        for (std::size_t p : factors) {
            if (p == 0) {
                infeasible("every factor needs at least one monomial");
            }
            if (p > space) {
                infeasible(std::to_string(p) + " distinct monomials requested in a factor but only " +
                           std::to_string(space) + " monomials exist");
            }
        }
    }
}

}  // namespace

ImprovedResult improved_factorize(const SummandForm& written, const ImprovedOptions& options)
{
    if (written.terms.empty()) {
        throw Error(ErrorCode::EmptyInput, "nothing to factor");
    }
    const SummandForm sf = options.auto_expand ? apply_auto_expand(written) : written;
    const Polynomial target = expand(sf);
    if (target.is_zero()) {
        throw Error(ErrorCode::ZeroInput, "expression is identically zero");
    }

    std::vector<MatrixFactorization> parts;
    const std::vector<Monomial> monomials = sf.monomial_terms();
    if (!monomials.empty()) {
        parts.push_back(standard_method(std::span<const Monomial>(monomials)));
    }
    for (const ProductTerm* p : sf.product_terms()) {
        parts.push_back(factor_product(*p, options.mult_variant));
    }
    MatrixFactorization acc = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        acc = yoshino(acc, parts[k], options.yoshino_variant);
    }

    if (acc.target() != target) {
        throw Error(ErrorCode::Internal, "improved factorization targets " + acc.target().to_string() +
                                             " instead of " + target.to_string());
    }
    const SizePrediction prediction = predict_sizes(sf);
    if (prediction.improved_exp < 0 || prediction.improved_exp >= 63 ||
        acc.size() != (std::size_t{1} << prediction.improved_exp)) {
        throw Error(ErrorCode::Internal, "improved factorization has size " + std::to_string(acc.size()) +
                                             ", expected 2^" + std::to_string(prediction.improved_exp));
    }
    return {std::move(acc), prediction};
}

MatrixFactorization standard_factorize(const SummandForm& sf)
{
    const WrittenSum terms = expand_written(sf);
    if (terms.empty()) {
        throw Error(ErrorCode::ZeroInput, "expression is identically zero");
    }
    return standard_method(std::span<const Monomial>(terms));
}

MatrixFactorization standard_factorize_grlex(const Polynomial& f)
{
    if (f.is_zero()) {
        throw Error(ErrorCode::ZeroInput, "cannot factor the zero polynomial");
    }
    return standard_method(f.terms());
}

bool CompareReport::consistent() const
{
    return standard_exp == prediction.standard_exp && improved_exp == prediction.improved_exp &&
           (prediction.cancellation || ratio_exp() == prediction.theorem_ratio_exp);
}

std::string CompareReport::to_json() const
{
    nlohmann::json j;
    j["standard_size"] = size_json(standard_exp);
    j["improved_size"] = size_json(improved_exp);
    j["ratio"] = ratio_exp() >= 0 ? size_json(ratio_exp()) : nlohmann::json(pow2_string(ratio_exp()));
    j["verified_standard"] = verified_standard ? nlohmann::json(*verified_standard) : nlohmann::json(nullptr);
    j["verified_improved"] = verified_improved;
    j["cancellation"] = prediction.cancellation;
    j["expanded_terms"] = prediction.expanded_terms;
    return j.dump();
}

CompareReport compare_methods(const SummandForm& sf, const CompareOptions& options)
{
    CompareReport r;
    const ImprovedResult improved = improved_factorize(sf, options.improved);
    r.prediction = improved.prediction;
    r.improved_exp = static_cast<long>(std::countr_zero(improved.factorization.size()));
    r.verified_improved = improved.factorization.verify().ok;

    const Polynomial f = expand(sf);
    r.standard_exp = static_cast<long>(f.monomial_count()) - 1;
    if (r.standard_exp < 63 && (std::size_t{1} << r.standard_exp) <= options.standard_build_limit) {
        const MatrixFactorization standard = standard_factorize_grlex(f);
        r.verified_standard = standard.verify().ok && standard.target() == f &&
                              standard.size() == (std::size_t{1} << r.standard_exp);
    }
    return r;
}

long Shape::theorem_ratio_exp() const
{
    long e = 0;
    for (const auto& factors : p) {
        long sum = 0;
        long prod = 1;
        for (std::size_t q : factors) {
            sum += static_cast<long>(q);
            prod *= static_cast<long>(q);
        }
        e += prod - sum;
    }
    return e;
}

long Shape::improved_exp() const
{
    long e = static_cast<long>(s) - 1;
    for (const auto& factors : p) {
        for (std::size_t q : factors) {
            e += static_cast<long>(q);
        }
    }
    return e;
}

SummandForm generate_instance(std::uint64_t seed, const Shape& shape)
{
    validate(shape);
    InstanceBuilder builder(seed, shape);
    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        SummandForm sf;
        for (const Monomial& m : builder.distinct_monomials(shape.s)) {
            sf.terms.emplace_back(MonomialTerm{m});
        }
        for (const auto& factors : shape.p) {
            ProductTerm term;
            for (std::size_t q : factors) {
                term.factors.push_back(builder.distinct_monomials(q));
            }
            sf.terms.emplace_back(std::move(term));
        }
        if (!predict_sizes(sf).cancellation) {
            return sf;
        }
    }
    throw Error(ErrorCode::InfeasibleShape, "no instance of this shape without cancellation found after " +
                                                std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace mfkit

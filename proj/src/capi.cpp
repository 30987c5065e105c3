#include "mfkit/mfkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mfkit/error.hpp"
#include "mfkit/expr.hpp"
#include "mfkit/reducer.hpp"
#include "mfkit/serialize.hpp"
#include "mfkit/tensor_ops.hpp"

struct mfk_form {
    mfkit::SummandForm sf;
};

struct mfk_factorization {
    mfkit::MatrixFactorization x;
};

namespace {

thread_local std::string last_error;

mfk_status status_of(mfkit::ErrorCode code)
{
    using mfkit::ErrorCode;
    switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::EmptyInput:
    case ErrorCode::ZeroInput:
    case ErrorCode::UndefinedSplit:
        return MFK_ERR_PARSE;
    case ErrorCode::NotAFactorization:
        return MFK_ERR_VERIFY;
    case ErrorCode::InfeasibleShape:
        return MFK_ERR_SHAPE;
    case ErrorCode::Overflow:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::SizeMismatch:
    case ErrorCode::TargetMismatch:
    case ErrorCode::CommutationFailure:
    case ErrorCode::NotAMorphism:
    case ErrorCode::ChainMismatch:
    case ErrorCode::InvalidVariant:
        return MFK_ERR_INVALID_ARGUMENT;
    case ErrorCode::NoValidPlacement:
    case ErrorCode::WitnessNotFound:
    case ErrorCode::Internal:
        return MFK_ERR_INTERNAL;
    }
    return MFK_ERR_INTERNAL;
}

mfk_status fail(mfk_status status, const std::string& message)
{
    last_error = message;
    return status;
}

template <typename F>
mfk_status guarded(F&& body)
{
    try {
        last_error.clear();
        return body();
    } catch (const mfkit::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(MFK_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(MFK_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

mfkit::ImprovedOptions improved_options(const mfk_factor_options* options)
{
    mfkit::ImprovedOptions o;
    if (options != nullptr) {
        if (options->yoshino_variant < 0 || options->yoshino_variant > 3 || options->mult_variant < 0 ||
            options->mult_variant > 1) {
            throw mfkit::Error(mfkit::ErrorCode::InvalidVariant, "variant out of range");
        }
        o.yoshino_variant = options->yoshino_variant;
        o.mult_variant = options->mult_variant;
        o.auto_expand = options->auto_expand != 0;
    }
    return o;
}

// Largest factorization (as a power of two) the C interface will build.
constexpr long kMaxBuildExp = 11;

void check_buildable(long exp, const char* what)
{
    if (exp > kMaxBuildExp) {
        throw mfkit::Error(mfkit::ErrorCode::InvalidVariant,
                           std::string(what) + " factorization would have size 2^" + std::to_string(exp) +
                               ", above the limit 2^" + std::to_string(kMaxBuildExp));
    }
}

#define MFK_REQUIRE(cond)                                                              \
    do {                                                                               \
        if (!(cond)) {                                                                 \
            return fail(MFK_ERR_INVALID_ARGUMENT, "invalid argument: " #cond);         \
        }                                                                              \
    } while (0)

}  // namespace

extern "C" {

const char* mfk_last_error(void)
{
    return last_error.c_str();
}

void mfk_string_free(char* s)
{
    std::free(s);
}

mfk_status mfk_parse_form(const char* text, mfk_form** out)
{
    MFK_REQUIRE(text != nullptr && out != nullptr);
    return guarded([&] {
        *out = new mfk_form{mfkit::parse(text)};
        return MFK_OK;
    });
}

void mfk_form_free(mfk_form* form)
{
    delete form;
}

mfk_status mfk_form_to_string(const mfk_form* form, char** out)
{
    MFK_REQUIRE(form != nullptr && out != nullptr);
    return guarded([&] {
        *out = dup(mfkit::to_string(form->sf));
        return MFK_OK;
    });
}

mfk_status mfk_form_expanded(const mfk_form* form, char** out)
{
    MFK_REQUIRE(form != nullptr && out != nullptr);
    return guarded([&] {
        *out = dup(mfkit::expand(form->sf).to_string());
        return MFK_OK;
    });
}

mfk_status mfk_form_classify(const mfk_form* form, mfk_form_kind* kind, char** lints)
{
    MFK_REQUIRE(form != nullptr && kind != nullptr);
    return guarded([&] {
        const mfkit::Classification c = mfkit::classify(form->sf);
        switch (c.kind) {
        case mfkit::FormKind::Plain: *kind = MFK_FORM_PLAIN; break;
        case mfkit::FormKind::SimpleSummandReduced: *kind = MFK_FORM_SIMPLE_SUMMAND_REDUCED; break;
        case mfkit::FormKind::SummandReduced: *kind = MFK_FORM_SUMMAND_REDUCED; break;
        }
        if (lints != nullptr) {
            std::string joined;
            for (const auto& l : c.lints) {
                joined += l + "\n";
            }
            *lints = dup(joined);
        }
        return MFK_OK;
    });
}

mfk_status mfk_form_predict(const mfk_form* form, mfk_prediction* out)
{
    MFK_REQUIRE(form != nullptr && out != nullptr);
    return guarded([&] {
        const mfkit::SizePrediction p = mfkit::predict_sizes(form->sf);
        *out = {p.standard_exp, p.improved_exp, p.theorem_ratio_exp, p.expanded_terms, p.cancellation ? 1 : 0};
        return MFK_OK;
    });
}

mfk_status mfk_factor(const mfk_form* form, const mfk_factor_options* options, mfk_factorization** out)
{
    MFK_REQUIRE(form != nullptr && out != nullptr);
    return guarded([&] {
        const mfkit::SizePrediction p = mfkit::predict_sizes(form->sf);
        const mfkit::ImprovedOptions o = improved_options(options);
        if (options != nullptr && options->method == MFK_METHOD_STANDARD) {
            check_buildable(p.standard_exp, "standard");
            *out = new mfk_factorization{mfkit::standard_factorize(form->sf)};
        } else {
            check_buildable(p.improved_exp, "improved");
            *out = new mfk_factorization{mfkit::improved_factorize(form->sf, o).factorization};
        }
        return MFK_OK;
    });
}

mfk_status mfk_factorization_from_json(const char* json, mfk_factorization** out)
{
    MFK_REQUIRE(json != nullptr && out != nullptr);
    return guarded([&] {
        *out = new mfk_factorization{mfkit::to_factorization(mfkit::parse_factorization_json(json))};
        return MFK_OK;
    });
}

size_t mfk_factorization_size(const mfk_factorization* x)
{
    return x == nullptr ? 0 : x->x.size();
}

mfk_status mfk_factorization_target(const mfk_factorization* x, char** out)
{
    MFK_REQUIRE(x != nullptr && out != nullptr);
    return guarded([&] {
        *out = dup(x->x.target().to_string());
        return MFK_OK;
    });
}

mfk_status mfk_factorization_to_json(const mfk_factorization* x, char** out)
{
    MFK_REQUIRE(x != nullptr && out != nullptr);
    return guarded([&] {
        *out = dup(mfkit::to_json(x->x));
        return MFK_OK;
    });
}

mfk_status mfk_factorization_to_text(const mfk_factorization* x, char** out)
{
    MFK_REQUIRE(x != nullptr && out != nullptr);
    return guarded([&] {
        *out = dup(mfkit::to_text(x->x));
        return MFK_OK;
    });
}

void mfk_factorization_free(mfk_factorization* x)
{
    delete x;
}

mfk_status mfk_verify_json(const char* json, mfk_verify_report* report, char** detail)
{
    MFK_REQUIRE(json != nullptr && report != nullptr);
    return guarded([&] {
        const mfkit::RawFactorization raw = mfkit::parse_factorization_json(json);
        const mfkit::VerifyReport r = mfkit::verify(raw.phi, raw.psi, raw.f);
        std::string text = r.to_string();
        if (r.ok && raw.f.is_zero()) {
            text = "f is zero";
        }
        *report = {r.ok && !raw.f.is_zero() ? 1 : 0, MFK_PRODUCT_PHI_PSI, 0, 0};
        if (r.mismatch) {
            report->product = r.mismatch->product == mfkit::Product::PhiPsi ? MFK_PRODUCT_PHI_PSI : MFK_PRODUCT_PSI_PHI;
            report->row = r.mismatch->row;
            report->col = r.mismatch->col;
        }
        if (detail != nullptr) {
            *detail = dup(text);
        }
        return MFK_OK;
    });
}

mfk_status mfk_tensor(const mfk_factorization* lhs, const mfk_factorization* rhs, mfk_tensor_kind kind, int variant,
                      mfk_factorization** out)
{
    MFK_REQUIRE(lhs != nullptr && rhs != nullptr && out != nullptr);
    MFK_REQUIRE(kind == MFK_TENSOR_ADD || kind == MFK_TENSOR_MUL);
    return guarded([&] {
        *out = new mfk_factorization{kind == MFK_TENSOR_ADD ? mfkit::yoshino(lhs->x, rhs->x, variant)
                                                            : mfkit::mult_tensor(lhs->x, rhs->x, variant)};
        return MFK_OK;
    });
}

mfk_status mfk_compare_json(const mfk_form* form, const mfk_factor_options* options, char** out)
{
    MFK_REQUIRE(form != nullptr && out != nullptr);
    return guarded([&] {
        check_buildable(mfkit::predict_sizes(form->sf).improved_exp, "improved");
        mfkit::CompareOptions o;
        o.improved = improved_options(options);
        *out = dup(mfkit::compare_methods(form->sf, o).to_json());
        return MFK_OK;
    });
}

mfk_status mfk_bench_instance(const mfk_shape* shape, uint64_t seed, mfk_bench_row* row, char** expr)
{
    MFK_REQUIRE(shape != nullptr && row != nullptr);
    MFK_REQUIRE(shape->num_products == 0 || shape->factor_counts != nullptr);
    return guarded([&] {
        mfkit::Shape s;
        s.s = shape->s;
        std::size_t offset = 0;
        for (std::size_t j = 0; j < shape->num_products; ++j) {
            std::vector<std::size_t> factors;
            for (std::size_t i = 0; i < shape->factor_counts[j]; ++i) {
                if (shape->monomial_counts == nullptr) {
                    throw mfkit::Error(mfkit::ErrorCode::InfeasibleShape, "missing monomial counts");
                }
                factors.push_back(shape->monomial_counts[offset++]);
            }
            s.p.push_back(std::move(factors));
        }
        if (shape->vars != nullptr) {
            s.vars = shape->vars;
        }
        if (shape->max_deg != 0) {
            s.max_deg = shape->max_deg;
        }
        const mfkit::SummandForm sf = mfkit::generate_instance(seed, s);
        check_buildable(s.improved_exp(), "improved");
        const mfkit::ImprovedResult r = mfkit::improved_factorize(sf);
        const bool verified = r.factorization.verify().ok && r.factorization.target() == mfkit::expand(sf);
        const mfkit::SizePrediction& p = r.prediction;
        *row = {p.standard_exp, p.improved_exp, p.ratio_exp(), p.theorem_ratio_exp, p.cancellation ? 1 : 0,
                verified ? 1 : 0};
        if (expr != nullptr) {
            *expr = dup(mfkit::to_string(sf));
        }
        return MFK_OK;
    });
}

}  // extern "C"

#ifndef MFKIT_H
#define MFKIT_H

/* C interface to the mfkit core: matrix factorizations of polynomials.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through char** are heap allocated and
 * released with mfk_string_free. On failure a function returns a nonzero
 * mfk_status and mfk_last_error() describes it (per thread). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define MFK_API __attribute__((visibility("default")))
#else
#define MFK_API
#endif

typedef enum mfk_status {
    MFK_OK = 0,
    MFK_ERR_PARSE = 1,            /* bad expression, malformed file, zero input */
    MFK_ERR_VERIFY = 2,           /* phi*psi or psi*phi differs from f*I */
    MFK_ERR_INVALID_ARGUMENT = 3, /* null pointer, bad variant, mismatched operands */
    MFK_ERR_SHAPE = 4,            /* infeasible benchmark shape */
    MFK_ERR_INTERNAL = 5
} mfk_status;

typedef struct mfk_form mfk_form;
typedef struct mfk_factorization mfk_factorization;

MFK_API const char* mfk_last_error(void);
MFK_API void mfk_string_free(char* s);

/* Expressions */

MFK_API mfk_status mfk_parse_form(const char* text, mfk_form** out);
MFK_API void mfk_form_free(mfk_form* form);
MFK_API mfk_status mfk_form_to_string(const mfk_form* form, char** out);
MFK_API mfk_status mfk_form_expanded(const mfk_form* form, char** out);

typedef enum mfk_form_kind {
    MFK_FORM_PLAIN = 0,
    MFK_FORM_SIMPLE_SUMMAND_REDUCED = 1,
    MFK_FORM_SUMMAND_REDUCED = 2
} mfk_form_kind;

/* lints receives one warning per line (possibly empty); may be NULL. */
MFK_API mfk_status mfk_form_classify(const mfk_form* form, mfk_form_kind* kind, char** lints);

/* Sizes are powers of two and reported as exponents. */
typedef struct mfk_prediction {
    long standard_exp;
    long improved_exp;
    long theorem_ratio_exp;
    size_t expanded_terms;
    int cancellation;
} mfk_prediction;

MFK_API mfk_status mfk_form_predict(const mfk_form* form, mfk_prediction* out);

/* Factorization */

typedef enum mfk_method { MFK_METHOD_STANDARD = 0, MFK_METHOD_IMPROVED = 1 } mfk_method;

typedef struct mfk_factor_options {
    mfk_method method;
    int yoshino_variant; /* 0..3 */
    int mult_variant;    /* 0 or 1 */
    int auto_expand;
} mfk_factor_options;

/* options may be NULL for the improved method with default variants. */
MFK_API mfk_status mfk_factor(const mfk_form* form, const mfk_factor_options* options, mfk_factorization** out);

/* Reads the JSON schema {"f", "size", "phi", "psi"} and verifies it. */
MFK_API mfk_status mfk_factorization_from_json(const char* json, mfk_factorization** out);
MFK_API size_t mfk_factorization_size(const mfk_factorization* x);
MFK_API mfk_status mfk_factorization_target(const mfk_factorization* x, char** out);
MFK_API mfk_status mfk_factorization_to_json(const mfk_factorization* x, char** out);
MFK_API mfk_status mfk_factorization_to_text(const mfk_factorization* x, char** out);
MFK_API void mfk_factorization_free(mfk_factorization* x);

typedef enum mfk_product { MFK_PRODUCT_PHI_PSI = 0, MFK_PRODUCT_PSI_PHI = 1 } mfk_product;

typedef struct mfk_verify_report {
    int ok;
    mfk_product product; /* first failing product when !ok */
    size_t row;          /* 0-based */
    size_t col;
} mfk_verify_report;

/* Returns MFK_OK when the file parsed, whatever the verdict; detail (may be
 * NULL) receives a one-line description. */
MFK_API mfk_status mfk_verify_json(const char* json, mfk_verify_report* report, char** detail);

typedef enum mfk_tensor_kind { MFK_TENSOR_ADD = 0, MFK_TENSOR_MUL = 1 } mfk_tensor_kind;

/* ADD: additive tensor product, variant 0..3. MUL: multiplicative, 0 or 1. */
MFK_API mfk_status mfk_tensor(const mfk_factorization* lhs, const mfk_factorization* rhs, mfk_tensor_kind kind,
                              int variant, mfk_factorization** out);

/* Standard vs improved comparison as a JSON object. */
MFK_API mfk_status mfk_compare_json(const mfk_form* form, const mfk_factor_options* options, char** out);

/* Benchmarks */

typedef struct mfk_shape {
    size_t s;
    size_t num_products;
    const size_t* factor_counts;   /* m_j, num_products entries */
    const size_t* monomial_counts; /* p_ji row by row, sum of m_j entries */
    const char* vars;              /* NULL means "xyz" */
    unsigned max_deg;              /* 0 means 3 */
} mfk_shape;

typedef struct mfk_bench_row {
    long standard_exp;
    long improved_exp;
    long ratio_exp;
    long theorem_ratio_exp;
    int cancellation;
    int verified;
} mfk_bench_row;

/* Generates the instance for seed, factors it with the improved method and
 * verifies it. expr (may be NULL) receives the instance. */
MFK_API mfk_status mfk_bench_instance(const mfk_shape* shape, uint64_t seed, mfk_bench_row* row, char** expr);

#ifdef __cplusplus
}
#endif

#endif

/* C interface to the bimahonian library.
 *
 * Every function returns a bm_status. On failure the message for the calling
 * thread is available from bm_last_error() until the next failing call.
 * Strings returned through char** are owned by the caller and released with
 * bm_string_free; polynomials with bm_poly_free. */
#ifndef BIMAHONIAN_H
#define BIMAHONIAN_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BM_API __declspec(dllexport)
#else
#define BM_API __attribute__((visibility("default")))
#endif

typedef enum bm_status {
    BM_OK = 0,
    BM_ERR_INVALID_ARGUMENT = 1,
    BM_ERR_BUDGET_EXCEEDED = 2,
    BM_ERR_VERIFICATION = 3,
    BM_ERR_DIVISION_BY_ZERO = 4,
    BM_ERR_CONDUCTOR_MISMATCH = 5,
    BM_ERR_INTERNAL = 6
} bm_status;

typedef struct bm_budget {
    unsigned long long max_group_order;
    int max_cells;
    int max_character_n;
} bm_budget;

typedef struct bm_poly bm_poly;

BM_API bm_budget bm_budget_default(void);
BM_API const char* bm_status_name(bm_status status);
BM_API const char* bm_last_error(void);
BM_API void bm_string_free(char* s);

/* Distributions. method is one of "fake", "fmaj", "molien", "wright".
 * sigma is the exponent s of zeta_d -> zeta_d^s and must be a unit mod d.
 * budget may be NULL for the defaults. */
BM_API bm_status bm_distribution(int d, int n, long long sigma, const char* method, const bm_budget* budget,
                                 bm_poly** out);
BM_API bm_status bm_mahonian(int d, int n, bm_poly** out);
/* shape_json lists components as [lambda^{d-1}, ..., lambda^0]. */
BM_API bm_status bm_fake_degree(const char* shape_json, const bm_budget* budget, bm_poly** out);

BM_API bm_status bm_poly_from_json(const char* json, bm_poly** out);
BM_API bm_status bm_poly_to_json(const bm_poly* p, char** out);
/* "i,j,coeff" lines after a header line. */
BM_API bm_status bm_poly_to_csv(const bm_poly* p, char** out);
BM_API bm_status bm_poly_to_text(const bm_poly* p, char** out);
BM_API bm_status bm_poly_equal(const bm_poly* a, const bm_poly* b, int* out);
/* Coefficient of t^i q^j as an exact rational string; fails for
 * non-rational coefficients. */
BM_API bm_status bm_poly_coefficient(const bm_poly* p, int i, int j, char** out);
/* var is 't' or 'q'; the variable is set to 1. */
BM_API bm_status bm_poly_specialize_one(const bm_poly* p, char var, bm_poly** out);
BM_API void bm_poly_free(bm_poly* p);

/* JSON documents. */
BM_API bm_status bm_rsk_json(int d, const char* window, char** out);
BM_API bm_status bm_regular_json(int d, int n, const bm_budget* budget, char** out);
/* Checks the biCSP for the cyclic groups generated by two regular elements,
 * each with its first regular eigenvalue. sigma is an exponent coprime to
 * lcm(d, ord c, ord c'). *passed is set to 1 when both conditions hold. */
BM_API bm_status bm_bicsp_json(int d, const char* c_window, const char* c_prime_window, long long sigma,
                               const bm_budget* budget, char** out, int* passed);
/* partition_json is a partition such as [2,1]. */
BM_API bm_status bm_character_json(const char* partition_json, const bm_budget* budget, char** out);
/* Runs a verification suite. d, n or degree <= 0 selects the suite's default
 * range. *passed is set to 1 when every check passes. */
BM_API bm_status bm_verify_json(const char* suite, int d, int n, int degree, const bm_budget* budget, char** out,
                                int* passed);

#ifdef __cplusplus
}
#endif

#endif

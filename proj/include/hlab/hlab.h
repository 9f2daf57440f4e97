/* C interface to the hlab exact-arithmetic library.
 *
 * Every entry point returns an hlab_status. Results come back through opaque
 * handles that the caller releases with the matching *_free function. On a
 * non-OK status hlab_last_error() describes the failure; the message is
 * thread-local and valid until the next call on the same thread.
 *
 * Rationals cross the boundary as strings "p", "-p" or "p/q".
 */
#ifndef HLAB_H
#define HLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HLAB_API __declspec(dllexport)
#else
#define HLAB_API __attribute__((visibility("default")))
#endif

typedef enum hlab_status {
  HLAB_OK = 0,
  HLAB_ERR_NULL_ARGUMENT = 1,
  HLAB_ERR_PARSE = 2,             /* malformed rational or polynomial text */
  HLAB_ERR_INVALID_ARGUMENT = 3,  /* a precondition of the operation failed */
  HLAB_ERR_CERTIFICATE = 4,       /* a certificate did not reproduce */
  HLAB_ERR_INTERNAL = 5
} hlab_status;

/* A parsed polynomial with rational coefficients. */
typedef struct hlab_poly hlab_poly;

/* A finished result: a JSON document, a plain-text rendering, and a verdict
 * (1 = positive outcome, 0 = negative outcome, e.g. "not hyperbolic"). */
typedef struct hlab_doc hlab_doc;

HLAB_API const char* hlab_last_error(void);
HLAB_API const char* hlab_status_string(hlab_status status);
HLAB_API const char* hlab_version(void);

/* Polynomials ------------------------------------------------------------ */

HLAB_API hlab_status hlab_poly_parse(const char* text, hlab_poly** out);
HLAB_API void hlab_poly_free(hlab_poly* poly);
/* Degree, or -1 for the zero polynomial. */
HLAB_API hlab_status hlab_poly_degree(const hlab_poly* poly, long* out);
/* Canonical text; release with hlab_string_free. */
HLAB_API hlab_status hlab_poly_to_text(const hlab_poly* poly, char** out);
HLAB_API hlab_status hlab_poly_eval(const hlab_poly* poly, const char* x, char** out);
HLAB_API void hlab_string_free(char* str);

/* Documents -------------------------------------------------------------- */

HLAB_API const char* hlab_doc_json(const hlab_doc* doc);
HLAB_API const char* hlab_doc_text(const hlab_doc* doc);
HLAB_API int hlab_doc_verdict(const hlab_doc* doc);
HLAB_API void hlab_doc_free(hlab_doc* doc);

/* Operations ------------------------------------------------------------- */

/* Legendre expansion of x^power * Le_index. */
HLAB_API hlab_status hlab_expand(unsigned power, unsigned index, hlab_doc** out);

/* Operator coefficients T_0..T_order for the sequence given as a polynomial
 * in k (parameters a, b, c allowed). a, b, c may each be NULL to keep the
 * parameter symbolic. */
HLAB_API hlab_status hlab_op_coeffs(const char* sequence, unsigned order, const char* a, const char* b,
                                    const char* c, hlab_doc** out);

/* Sturm root count; verdict 1 iff every zero is real. */
HLAB_API hlab_status hlab_hyperbolic(const hlab_poly* poly, hlab_doc** out);

/* Hypergeometric and Catalan identities for 1 <= n <= max_n; verdict 1 iff all hold. */
HLAB_API hlab_status hlab_identities(unsigned max_n, hlab_doc** out);

/* Symbolic certificate for the cubic family; verdict 1 iff infeasible. */
HLAB_API hlab_status hlab_cubic_cert(hlab_doc** out);

/* Counterexample for the numeric cubic sequence k^3 + a k^2 + b k + c. */
HLAB_API hlab_status hlab_cubic_witness(const char* a, const char* b, const char* c, hlab_doc** out);

/* Laguerre-inequality obstruction for the linear sequence k + c. */
HLAB_API hlab_status hlab_linear_cert(const char* c, hlab_doc** out);

typedef struct hlab_verify_options {
  unsigned max_tk;          /* 0 selects the default (HLAB_MAX_ORDER or 24) */
  unsigned max_identity_n;  /* 0 selects the default (HLAB_MAX_ORDER or 50) */
  /* Optional replacement for the expected Legendre coefficients of x^5 Le_3,
   * as a comma-separated list of rationals. NULL keeps the reference values. */
  const char* p1_expected;
} hlab_verify_options;

/* Full reproduction suite; verdict 1 iff every check passes. options may be NULL. */
HLAB_API hlab_status hlab_verify(const hlab_verify_options* options, hlab_doc** out);

#ifdef __cplusplus
}
#endif

#endif /* HLAB_H */

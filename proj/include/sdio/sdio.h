/*
 * C interface to the sdio library: S-smooth integers, generalized
 * S-Diophantine tuples and the related polynomial / dependence tooling.
 *
 * Conventions
 *   - Every entry point returns an sdio_status. SDIO_OK and SDIO_NEGATIVE
 *     both mean the request was understood; SDIO_NEGATIVE carries a "no"
 *     answer (not smooth, verification failed, no relation).
 *   - Results are JSON objects, one per record, with "cmd" and "ok" as the
 *     first two fields. Single-record calls hand back a heap string in
 *     *out_json that the caller releases with sdio_string_free. Streaming
 *     calls deliver each record to a callback instead.
 *   - On error statuses the same channel receives an error record
 *     {"cmd":..., "ok":false, "error":"<Kind>", "message":"..."}; the
 *     message is also available from sdio_last_error() on that thread.
 *   - Integers are decimal strings on input. In output they are JSON
 *     numbers when they fit in 64 bits and decimal strings otherwise;
 *     rationals are "p" or "p/q" strings.
 *   - Polynomials use ascending comma-separated coefficients: "-1,-1,1"
 *     is X^2 - X - 1.
 */
#ifndef SDIO_H
#define SDIO_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SDIO_BUILDING)
#    define SDIO_API __declspec(dllexport)
#  else
#    define SDIO_API __declspec(dllimport)
#  endif
#else
#  define SDIO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdio_status {
  SDIO_OK = 0,
  SDIO_NEGATIVE = 1,
  SDIO_ERR_INVALID_INPUT = 2,
  SDIO_ERR_PARSE = 3,
  SDIO_ERR_NON_DISTINCT_NODES = 4,
  SDIO_ERR_ZERO_POLYNOMIAL = 5,
  SDIO_ERR_CONSTANT_POLYNOMIAL = 6,
  SDIO_ERR_PRECONDITION = 7,
  SDIO_ERR_INSUFFICIENT_DATA = 8,
  SDIO_ERR_NOT_IN_FAMILY = 9,
  SDIO_ERR_INCONSISTENT_RELATIONS = 10,
  SDIO_ERR_RECONSTRUCTION = 11,
  SDIO_ERR_INTERNAL = 12
} sdio_status;

typedef struct sdio_primeset sdio_primeset;
typedef struct sdio_poly sdio_poly;

typedef void (*sdio_line_fn)(const char* json, void* user);
typedef void (*sdio_progress_fn)(size_t done, size_t total, void* user);

SDIO_API const char* sdio_version(void);
SDIO_API const char* sdio_status_name(sdio_status status);
SDIO_API const char* sdio_last_error(void);
SDIO_API void sdio_string_free(char* s);

/* Prime sets: "2,3,193", or a file with one prime per line. Duplicates and
 * non-primes are rejected. */
SDIO_API sdio_status sdio_primeset_parse(const char* text, sdio_primeset** out);
SDIO_API sdio_status sdio_primeset_load(const char* path, sdio_primeset** out);
SDIO_API size_t sdio_primeset_size(const sdio_primeset* set);
SDIO_API void sdio_primeset_free(sdio_primeset* set);

/* Integer polynomials. */
SDIO_API sdio_status sdio_poly_parse(const char* text, sdio_poly** out);
SDIO_API int sdio_poly_degree(const sdio_poly* poly);
SDIO_API void sdio_poly_free(sdio_poly* poly);

/* --- S-units --------------------------------------------------------- */

SDIO_API sdio_status sdio_smooth(const sdio_primeset* set, const char* n, char** out_json);
SDIO_API sdio_status sdio_enumerate(const sdio_primeset* set, const char* bound, sdio_line_fn emit, void* user);
SDIO_API sdio_status sdio_gcd(const char* a, const char* b, char** out_json);

/* --- tuples ----------------------------------------------------------- */

typedef struct sdio_search_options {
  const char* bound;
  unsigned size;
  int strict;
  int exclude_trivial;
  unsigned threads;
  sdio_progress_fn progress; /* may be NULL */
  void* progress_user;
} sdio_search_options;

SDIO_API sdio_status sdio_search(const sdio_primeset* set, const sdio_poly* f, const sdio_search_options* opts,
                                 sdio_line_fn emit, void* user);
SDIO_API sdio_status sdio_pairs(const sdio_primeset* set, const sdio_poly* f, const char* bound, sdio_line_fn emit,
                                void* user);
SDIO_API sdio_status sdio_verify(const sdio_primeset* set, const sdio_poly* f, const char* tuple, char** out_json);
SDIO_API sdio_status sdio_identity(const char* a, const char* b, const char* c, const char* q, unsigned long k,
                                   unsigned long m, unsigned long n, char** out_json);

/* --- polynomials ------------------------------------------------------ */

/* Interpolates ab = g(u), ac = g(v), bc = g(w) and clears denominators.
 * set may be NULL; when given, the units must be S-smooth and the scaled
 * tuple is re-verified. */
SDIO_API sdio_status sdio_construct(const char* tuple, const char* units, const sdio_primeset* set,
                                    char** out_json);
SDIO_API sdio_status sdio_check_poly(const sdio_poly* f, char** out_json);
SDIO_API sdio_status sdio_squarefree(const sdio_poly* f, char** out_json);
SDIO_API sdio_status sdio_scaling(const sdio_poly* f, const char* phi, char** out_json);
SDIO_API sdio_status sdio_compose(const sdio_poly* f, const char* eta, unsigned d, char** out_json);
/* poly may have rational coefficients here. */
SDIO_API sdio_status sdio_eval(const char* poly, const char* x, char** out_json);
/* points: "x:y,x:y,..." with integer or p/q entries. */
SDIO_API sdio_status sdio_interpolate(const char* points, char** out_json);

/* --- dependence, families, curves ------------------------------------- */

/* pairs: "v:w,v:w,..." */
SDIO_API sdio_status sdio_dependence(const sdio_primeset* set, const char* pairs, char** out_json);
/* relation: "k,l" or {"k":..,"l":..}; base, sample: "v:w". */
SDIO_API sdio_status sdio_rho(const sdio_primeset* set, const char* relation, const char* base, const char* sample,
                              char** out_json);
/* base, sample: "u,v,w". */
SDIO_API sdio_status sdio_family(const sdio_primeset* set, const char* rel_vw, const char* rel_uw,
                                 const char* base, const char* sample, char** out_json);
/* family_json: object with "eta" and "d" arrays (the family record works). */
SDIO_API sdio_status sdio_audit(const sdio_poly* f, const char* family_json, char** out_json);
/* curve may have rational coefficients. */
SDIO_API sdio_status sdio_audit_curve(const char* curve, char** out_json);
SDIO_API sdio_status sdio_gcd_probe(const sdio_primeset* set, const sdio_poly* f, const char* pairs, double epsilon,
                                    char** out_json);

#ifdef __cplusplus
}
#endif

#endif

#ifndef RADEMACHER_H
#define RADEMACHER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes; `RDM_STATUS_OK` is zero, everything else is a failure.
 */
typedef enum {
  RDM_STATUS_OK = 0,
  RDM_STATUS_NULL_ARGUMENT = 1,
  RDM_STATUS_INVALID_UTF8 = 2,
  RDM_STATUS_PARSE_ERROR = 3,
  RDM_STATUS_DETERMINANT_MISMATCH = 4,
  RDM_STATUS_DIVISIBILITY_VIOLATION = 5,
  RDM_STATUS_INVALID_PRIME = 6,
  RDM_STATUS_PRIME_MISMATCH = 7,
  RDM_STATUS_DEDEKIND_DOMAIN = 8,
  RDM_STATUS_NOT_IN_GAMMA0 = 9,
  RDM_STATUS_NOT_AN_EDGE = 10,
  RDM_STATUS_WRONG_BASE_EDGE = 11,
  RDM_STATUS_TOO_FEW_ENDPOINTS = 12,
  RDM_STATUS_INVALID_FRACTION = 13,
  RDM_STATUS_IMAGINARY_PART_TOO_SMALL = 14,
  RDM_STATUS_PRECISION_TOO_LOW = 15,
  RDM_STATUS_RENDER_OPTIONS = 16,
  RDM_STATUS_NUMERIC = 17,
  /**
   * The value does not fit the requested fixed-width integer.
   */
  RDM_STATUS_OVERFLOW = 18,
  /**
   * A Rust panic was caught at the boundary; this is a library bug.
   */
  RDM_STATUS_PANIC = 19,
} RdmStatus;

/**
 * Opaque element of `Gamma0+(p)`.
 */
typedef struct RdmFrickeElement RdmFrickeElement;

/**
 * Opaque `SL2(Z)` matrix.
 */
typedef struct RdmMatrix RdmMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or `""`. The pointer stays
 * valid until the next call into this library from the same thread.
 */
const char *rdm_last_error_message(void);

/**
 * Stable snake_case name of a status code; never null, never freed.
 */
const char *rdm_status_name(RdmStatus status);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void rdm_string_free(char *s);

/**
 * `(a b; c d)`; fails unless `ad - bc = 1`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
RdmStatus rdm_matrix_new(int64_t a, int64_t b, int64_t c, int64_t d, RdmMatrix **out);

/**
 * Parses `"a,b,c,d"` with entries of any size.
 *
 * # Safety
 * `s` must be a NUL-terminated string; `out` must be valid for writes.
 */
RdmStatus rdm_matrix_parse(const char *s, RdmMatrix **out);

/**
 * Releases a matrix handle. Null is ignored.
 *
 * # Safety
 * `m` must come from this library and must not be used afterwards.
 */
void rdm_matrix_free(RdmMatrix *m);

/**
 * Matrix product `x y` as a new handle.
 *
 * # Safety
 * `x`, `y` must be live handles; `out` must be valid for writes.
 */
RdmStatus rdm_matrix_mul(const RdmMatrix *x, const RdmMatrix *y, RdmMatrix **out);

/**
 * Text form `"a,b,c,d"`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
RdmStatus rdm_matrix_to_string(const RdmMatrix *m, char **out);

/**
 * Rademacher symbol as a decimal string.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
RdmStatus rdm_phi(const RdmMatrix *m, char **out);

/**
 * Rademacher symbol as a 64-bit integer; `RDM_STATUS_OVERFLOW` if it does not fit.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
RdmStatus rdm_phi_i64(const RdmMatrix *m, int64_t *out);

/**
 * Word and endpoints of a based edge path for `m`, as
 * `{"word": [...], "endpoints": ["1/0", ...]}`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
RdmStatus rdm_decompose(const RdmMatrix *m, char **out);

/**
 * Endpoints of the word `"a1,a2,..."` as a JSON array of fractions.
 *
 * # Safety
 * `word` must be a NUL-terminated string; `out` must be valid for writes.
 */
RdmStatus rdm_endpoints(const char *word, char **out);

/**
 * `{"trace": t, "signature": s, "phi": t - 3 s}` for the word `"a1,a2,..."`.
 *
 * # Safety
 * `word` must be a NUL-terminated string; `out` must be valid for writes.
 */
RdmStatus rdm_km(const char *word, char **out);

/**
 * Smallest even `k` with `24 | (p - 1) k`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
RdmStatus rdm_k_of_p(uint64_t p, uint64_t *out);

/**
 * Element of `Gamma0(p)`; the matrix is copied.
 *
 * # Safety
 * `m` must be a live handle; `out` must be valid for writes.
 */
RdmStatus rdm_fricke_gamma0(uint64_t p, const RdmMatrix *m, RdmFrickeElement **out);

/**
 * Coset element `(1/sqrt p)(p alpha, beta; p gamma, p delta)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
RdmStatus rdm_fricke_coset(uint64_t p,
                           int64_t alpha,
                           int64_t beta,
                           int64_t gamma,
                           int64_t delta,
                           RdmFrickeElement **out);

/**
 * Parses the coset form `"p:alpha,beta,gamma,delta"`.
 *
 * # Safety
 * `s` must be a NUL-terminated string; `out` must be valid for writes.
 */
RdmStatus rdm_fricke_parse(const char *s, RdmFrickeElement **out);

/**
 * Group product `x y` in `Gamma0+(p)`.
 *
 * # Safety
 * `x`, `y` must be live handles; `out` must be valid for writes.
 */
RdmStatus rdm_fricke_mul(const RdmFrickeElement *x,
                         const RdmFrickeElement *y,
                         RdmFrickeElement **out);

/**
 * Releases an element handle. Null is ignored.
 *
 * # Safety
 * `e` must come from this library and must not be used afterwards.
 */
void rdm_fricke_free(RdmFrickeElement *e);

/**
 * `Phi_p` as an exact rational string such as `"3"` or `"-5/2"`; with
 * `geometric` set, evaluated through traces and signatures of edge paths.
 *
 * # Safety
 * `e` must be a live handle; `out` must be valid for writes.
 */
RdmStatus rdm_phi_p(const RdmFrickeElement *e, bool geometric, char **out);

/**
 * Residual report of the eta transformation law at `z = "re,im"`, as JSON.
 *
 * # Safety
 * `m` must be a live handle, `z` a NUL-terminated string, `out` valid for writes.
 */
RdmStatus rdm_verify_eta(const RdmMatrix *m, const char *z, uint32_t precision, char **out);

/**
 * Residual report of the `eta_p` transformation law at `z = "re,im"`, as JSON.
 *
 * # Safety
 * `e` must be a live handle, `z` a NUL-terminated string, `out` valid for writes.
 */
RdmStatus rdm_verify_theorem1(const RdmFrickeElement *e,
                              const char *z,
                              uint32_t precision,
                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RADEMACHER_H */

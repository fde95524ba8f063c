#ifndef QTC_H
#define QTC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum QtcStatus {
  QTC_STATUS_OK = 0,
  QTC_STATUS_NULL_POINTER = 1,
  QTC_STATUS_DOMAIN = 2,
  QTC_STATUS_NOT_POLYNOMIAL = 3,
  QTC_STATUS_PARSE = 4,
  QTC_STATUS_OUT_OF_RANGE = 5,
  QTC_STATUS_PANIC = 6,
} QtcStatus;

/**
 * Evaluation methods accepted by [`qtc_compute`].
 */
typedef enum QtcMethod {
  /**
   * Sum over standard tableaux; input `(a_2, ..., a_n)`, `n <= 8`.
   */
  QTC_METHOD_TABLEAUX = 0,
  /**
   * Sum over Tesler matrices; input is the full hook vector `(a_1, ..., a_n)`.
   */
  QTC_METHOD_TESLER = 1,
  /**
   * Closed forms and the one-step recursion; one, two or three arguments.
   */
  QTC_METHOD_RECURSION = 2,
  /**
   * Two-step recursion; three arguments with `c >= 1`.
   */
  QTC_METHOD_TWO_STEP = 3,
  /**
   * Sum of symmetric chains; three arguments.
   */
  QTC_METHOD_CHAINS = 4,
  /**
   * Sum of `q^area t^stat` over subpartitions; three arguments.
   */
  QTC_METHOD_STAT = 5,
} QtcMethod;

/**
 * Opaque polynomial handle.
 */
typedef struct QtcPoly QtcPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes `F` by `method` from `len` integers at `values` and stores a new
 * handle in `*out`.
 *
 * # Safety
 * `values` must point to `len` readable integers (it may be null when `len`
 * is 0) and `out` must be a valid pointer to writable storage.
 */
enum QtcStatus qtc_compute(enum QtcMethod method,
                           const int64_t *values,
                           size_t len,
                           struct QtcPoly **out);

/**
 * Parses the JSON form `{"params": [...], "terms": [...]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum QtcStatus qtc_poly_from_json(const char *json, struct QtcPoly **out);

/**
 * Renders `poly` as JSON with the given `params`. The string in `*out` must
 * be released with [`qtc_string_free`].
 *
 * # Safety
 * `poly` must be a live handle, `params` must point to `len` integers (or be
 * null with `len == 0`) and `out` must be valid.
 */
enum QtcStatus qtc_poly_to_json(const struct QtcPoly *poly,
                                const int64_t *params,
                                size_t len,
                                char **out);

/**
 * Renders `poly` in the plain text form, e.g. `q^2 + q*t + t^2`.
 *
 * # Safety
 * `poly` must be a live handle and `out` must be valid.
 */
enum QtcStatus qtc_poly_to_string(const struct QtcPoly *poly, char **out);

/**
 * Number of nonzero terms, or 0 for a null handle.
 *
 * # Safety
 * `poly` must be null or a live handle.
 */
size_t qtc_poly_num_terms(const struct QtcPoly *poly);

/**
 * Term `index` in display order (`q` exponent descending, then `t`
 * ascending). `*coeff` receives a decimal string that stays valid for the
 * lifetime of the handle and must not be freed.
 *
 * # Safety
 * `poly` must be a live handle and the output pointers must be valid.
 */
enum QtcStatus qtc_poly_term(const struct QtcPoly *poly,
                             size_t index,
                             int64_t *q_exp,
                             int64_t *t_exp,
                             const char **coeff);

/**
 * Whether two handles hold the same polynomial. Null handles compare unequal.
 *
 * # Safety
 * Both pointers must be null or live handles.
 */
bool qtc_poly_equal(const struct QtcPoly *a, const struct QtcPoly *b);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `poly` must be null or a handle not yet freed.
 */
void qtc_poly_free(struct QtcPoly *poly);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void qtc_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *qtc_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QTC_H */

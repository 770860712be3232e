#ifndef HM_H
#define HM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum HmStatus {
  HM_STATUS_OK = 0,
  HM_STATUS_NULL_POINTER = 1,
  HM_STATUS_INVALID_ARGUMENT = 2,
  HM_STATUS_NOT_PRIME = 3,
  HM_STATUS_INSUFFICIENT_PRECISION = 4,
  HM_STATUS_NO_CYCLE = 5,
  HM_STATUS_ARITHMETIC = 6,
  /**
   * A value does not fit the caller's integer type.
   */
  HM_STATUS_OVERFLOW = 7,
  /**
   * The caller's buffer is too small; the required length was written.
   */
  HM_STATUS_BUFFER_TOO_SMALL = 8,
  HM_STATUS_INTERNAL = 9,
} HmStatus;

/**
 * Source of Hankel determinants for [`hm_hankel_json`].
 */
typedef enum HmHankelSource {
  HM_HANKEL_SOURCE_FORMULA = 0,
  HM_HANKEL_SOURCE_BRUTE_FORCE = 1,
  HM_HANKEL_SOURCE_BOTH = 2,
} HmHankelSource;

/**
 * Opaque H-fraction of a shifted q-metallic number.
 */
typedef struct HmHFraction HmHFraction;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string. Do not free.
 */
const char *hm_version(void);

/**
 * Message of the last failed call on this thread, or NULL. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *hm_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void hm_string_free(char *s);

/**
 * Taylor coefficients of the n-th q-metallic number, `prec` of them, into
 * `out`. `*written` receives the number of coefficients even on
 * `BufferTooSmall`.
 *
 * # Safety
 * `out` must point to `len` writable values; `written` must be valid.
 */
enum HmStatus hm_series(size_t n, size_t prec, int64_t *out, size_t len, size_t *written);

/**
 * Runs Algorithm Q on the `ell`-th shift of the n-th q-metallic number.
 * `max_steps = 0` selects the default step cap.
 *
 * # Safety
 * `out` must be a valid pointer; the handle written there must be freed
 * with [`hm_hfraction_free`].
 */
enum HmStatus hm_hfraction_new(size_t n, size_t ell, size_t max_steps, struct HmHFraction **out);

/**
 * Releases a handle from [`hm_hfraction_new`]. NULL is ignored.
 *
 * # Safety
 * `h` must come from [`hm_hfraction_new`] and must not be used afterwards.
 */
void hm_hfraction_free(struct HmHFraction *h);

/**
 * Index of the first periodic term, written to `offset`, and the cycle
 * length, written to `period` (0 for a finite fraction).
 *
 * # Safety
 * All pointers must be valid.
 */
enum HmStatus hm_hfraction_shape(const struct HmHFraction *h, size_t *offset, size_t *period);

/**
 * The fraction as a JSON object `{n, ell, hfraction}`.
 *
 * # Safety
 * `h` and `out` must be valid; free the string with [`hm_string_free`].
 */
enum HmStatus hm_hfraction_json(const struct HmHFraction *h, char **out);

/**
 * Hankel determinants Δ_0 .. Δ_{horizon-1} read off the fraction.
 *
 * # Safety
 * `out` must point to `len` writable values; `written` must be valid.
 */
enum HmStatus hm_hfraction_hankel(const struct HmHFraction *h,
                                  size_t horizon,
                                  int64_t *out,
                                  size_t len,
                                  size_t *written);

/**
 * Hankel report as JSON, same layout as `hm hankel --format json`.
 *
 * # Safety
 * `out` must be valid; free the string with [`hm_string_free`].
 */
enum HmStatus hm_hankel_json(size_t n,
                             size_t ell,
                             size_t horizon,
                             enum HmHankelSource source,
                             char **out);

/**
 * Periodicity report modulo the prime `p` as JSON. `max_steps = 0`
 * selects the default step cap.
 *
 * # Safety
 * `out` must be valid; free the string with [`hm_string_free`].
 */
enum HmStatus hm_modp_json(size_t n, size_t ell, uint64_t p, size_t max_steps, char **out);

/**
 * Exploratory scan of the `ell`-th shift (`ell >= n + 2`) as JSON.
 *
 * # Safety
 * `out` must be valid; free the string with [`hm_string_free`].
 */
enum HmStatus hm_scan_json(size_t n, size_t ell, size_t horizon, char **out);

/**
 * Runs the named verification suite for `n_min ..= n_max` with both
 * Hankel sources and writes the report as JSON. `*passed` receives 1 when
 * every check passed, else 0.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `passed` and `out` must be
 * valid.
 */
enum HmStatus hm_verify_json(const char *suite,
                             size_t n_min,
                             size_t n_max,
                             int32_t *passed,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HM_H */

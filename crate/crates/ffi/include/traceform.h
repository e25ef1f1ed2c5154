#ifndef TRACEFORM_H
#define TRACEFORM_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum TfStatus {
  TF_STATUS_OK = 0,
  TF_STATUS_NULL_POINTER = 1,
  TF_STATUS_INVALID_UTF8 = 2,
  TF_STATUS_PARSE = 3,
  TF_STATUS_OUT_OF_RANGE = 4,
  TF_STATUS_CAP_EXCEEDED = 5,
  TF_STATUS_FACTORIZATION_LIMIT = 6,
  TF_STATUS_MATH = 7,
  TF_STATUS_PANIC = 8,
} TfStatus;

/**
 * A diagonal quadratic form over Q.
 */
typedef struct TfForm TfForm;

/**
 * A finite group given by its multiplication table.
 */
typedef struct TfGroup TfGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *tf_version(void);

/**
 * Copy of the calling thread's last error message, or NULL if the last
 * call succeeded. Free with [`tf_string_free`].
 */
char *tf_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void tf_string_free(char *s);

/**
 * Builds a group from a spec such as `catalog:sym:4` or
 * `perms:(0 1 2 3),(0 2)`.
 *
 * # Safety
 * `spec` must be a valid NUL-terminated string; `out` must be writable.
 */
enum TfStatus tf_group_new(const char *spec, struct TfGroup **out);

/**
 * # Safety
 * `g` must be NULL or a handle from [`tf_group_new`] not yet freed.
 */
void tf_group_free(struct TfGroup *g);

/**
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
enum TfStatus tf_group_order(const struct TfGroup *g, size_t *out);

/**
 * Dimension of H²(G, F2).
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
enum TfStatus tf_group_h2_dim(const struct TfGroup *g, size_t *out);

/**
 * Dimension of the kernel of the s-map.
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
enum TfStatus tf_group_ker_s_dim(const struct TfGroup *g, size_t *out);

/**
 * Whether the group is 2-reduced.
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
enum TfStatus tf_group_is_2_reduced(const struct TfGroup *g, bool *out);

/**
 * Sign of the square of a lifted fixed-point-free involution in Pin(n),
 * for even `n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum TfStatus tf_pin_square_sign(size_t n, int32_t *out);

/**
 * Parses a diagonal form such as `1,-2,3/5`.
 *
 * # Safety
 * `entries` must be a valid NUL-terminated string; `out` must be writable.
 */
enum TfStatus tf_form_parse(const char *entries, struct TfForm **out);

/**
 * Trace form of the étale algebra Q[x]/(f) for a separable monic `f`,
 * coefficients from the leading one down.
 *
 * # Safety
 * `coeffs` must point to `len` readable values; `out` must be writable.
 */
enum TfStatus tf_trace_form(const int64_t *coeffs, size_t len, struct TfForm **out);

/**
 * # Safety
 * `q` must be NULL or a form handle not yet freed.
 */
void tf_form_free(struct TfForm *q);

/**
 * # Safety
 * `q` must be a live form handle; `out` must be writable.
 */
enum TfStatus tf_form_rank(const struct TfForm *q, size_t *out);

/**
 * Rank, signature, w1 and the places of w2 as a JSON object.
 *
 * # Safety
 * `q` must be a live form handle; `out` must be writable.
 */
enum TfStatus tf_form_invariants_json(const struct TfForm *q, char **out);

/**
 * # Safety
 * `a` and `b` must be live form handles; `out` must be writable.
 */
enum TfStatus tf_form_is_isometric(const struct TfForm *a, const struct TfForm *b, bool *out);

/**
 * Runs the acceptance suite, or a single criterion when `criterion` is in
 * 1..=10 (0 runs all), and writes the JSON report to `out`. `passed` is
 * optional.
 *
 * # Safety
 * `out` must be writable; `passed` must be NULL or writable.
 */
enum TfStatus tf_suite_run(uint64_t seed, uint8_t criterion, char **out, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRACEFORM_H */

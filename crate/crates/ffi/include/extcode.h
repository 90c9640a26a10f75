#ifndef EXTCODE_H
#define EXTCODE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a fallible call.
 */
typedef enum ExtcodeStatus {
  EXTCODE_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  EXTCODE_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  EXTCODE_STATUS_INVALID_UTF8 = 2,
  /**
   * A JSON argument did not parse.
   */
  EXTCODE_STATUS_PARSE = 3,
  /**
   * Arguments were rejected (bad field, dimensions, lengths, ...).
   */
  EXTCODE_STATUS_INVALID_INPUT = 4,
  /**
   * The computation needs more work than the budget allows.
   */
  EXTCODE_STATUS_BUDGET_EXCEEDED = 5,
  /**
   * The operation needs an MDS code.
   */
  EXTCODE_STATUS_NOT_MDS = 6,
  /**
   * An internal error; please report it.
   */
  EXTCODE_STATUS_INTERNAL = 7,
} ExtcodeStatus;

/**
 * A linear code.
 */
typedef struct ExtcodeCode ExtcodeCode;

/**
 * A finite field `GF(p^m)`.
 */
typedef struct ExtcodeField ExtcodeField;

/**
 * Covering radius and deep-hole cosets of a code.
 */
typedef struct ExtcodeReport ExtcodeReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a
 * successful call. The pointer stays valid until the next call into the
 * library on this thread.
 */
const char *extcode_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void extcode_string_free(char *s);

/**
 * Creates `GF(p^m)` with the default modulus.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum ExtcodeStatus extcode_field_new(uint32_t p, uint32_t m, struct ExtcodeField **out);

/**
 * # Safety
 * `field` must be null or a live handle from [`extcode_field_new`].
 */
void extcode_field_free(struct ExtcodeField *field);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `field` must be null or a live handle.
 */
uint32_t extcode_field_order(const struct ExtcodeField *field);

/**
 * Builds a code from a JSON code description. `field` supplies the field
 * when the description has none and may be null.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `field` null or a live handle;
 * `out` valid for writes.
 */
enum ExtcodeStatus extcode_code_from_json(const char *json,
                                          const struct ExtcodeField *field,
                                          struct ExtcodeCode **out);

/**
 * The code spanned by the rows of a `rows x cols` generator given in
 * row-major order.
 *
 * # Safety
 * `entries` must point to `rows * cols` values; `field` must be a live
 * handle; `out` valid for writes.
 */
enum ExtcodeStatus extcode_code_from_generator(const struct ExtcodeField *field,
                                               size_t rows,
                                               size_t cols,
                                               const uint32_t *entries,
                                               struct ExtcodeCode **out);

/**
 * # Safety
 * `code` must be null or a live handle.
 */
void extcode_code_free(struct ExtcodeCode *code);

/**
 * Length `n`, or 0 for a null handle.
 *
 * # Safety
 * `code` must be null or a live handle.
 */
size_t extcode_code_length(const struct ExtcodeCode *code);

/**
 * Dimension `k`, or 0 for a null handle.
 *
 * # Safety
 * `code` must be null or a live handle.
 */
size_t extcode_code_dimension(const struct ExtcodeCode *code);

/**
 * Minimum distance, searching at most `budget` steps.
 *
 * # Safety
 * `code` must be a live handle; `out` valid for writes.
 */
enum ExtcodeStatus extcode_code_min_distance(const struct ExtcodeCode *code,
                                             uint64_t budget,
                                             size_t *out);

/**
 * # Safety
 * `code` must be a live handle; `out` valid for writes.
 */
enum ExtcodeStatus extcode_code_is_mds(const struct ExtcodeCode *code, uint64_t budget, bool *out);

/**
 * # Safety
 * `code` must be a live handle; `out` valid for writes.
 */
enum ExtcodeStatus extcode_code_dual(const struct ExtcodeCode *code, struct ExtcodeCode **out);

/**
 * The extension of `code` by `u`: each codeword `c` gains the coordinate
 * `<u, c>`.
 *
 * # Safety
 * `code` must be a live handle; `u` must point to `len` values; `out`
 * valid for writes.
 */
enum ExtcodeStatus extcode_code_extend(const struct ExtcodeCode *code,
                                       const uint32_t *u,
                                       size_t len,
                                       struct ExtcodeCode **out);

/**
 * The code as a JSON generator-matrix description. Free the string with
 * [`extcode_string_free`].
 *
 * # Safety
 * `code` must be a live handle; `out` valid for writes.
 */
enum ExtcodeStatus extcode_code_to_json(const struct ExtcodeCode *code, char **out);

/**
 * Covering radius by syndrome enumeration over at most `budget`
 * syndromes. With `representatives`, the report also keeps one vector per
 * deep-hole coset.
 *
 * # Safety
 * `code` must be a live handle; `out` valid for writes.
 */
enum ExtcodeStatus extcode_covering_radius(const struct ExtcodeCode *code,
                                           uint64_t budget,
                                           bool representatives,
                                           struct ExtcodeReport **out);

/**
 * # Safety
 * `report` must be null or a live handle.
 */
void extcode_report_free(struct ExtcodeReport *report);

/**
 * Covering radius, or 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
size_t extcode_report_rho(const struct ExtcodeReport *report);

/**
 * Number of cosets at distance `rho`, or 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
size_t extcode_report_num_deep_hole_cosets(const struct ExtcodeReport *report);

/**
 * Summary as JSON (`rho`, `num_deep_hole_cosets` and, when the report
 * has them and `representatives` is set, the representatives).
 *
 * # Safety
 * `report` must be a live handle; `out` valid for writes.
 */
enum ExtcodeStatus extcode_report_to_json(const struct ExtcodeReport *report,
                                          bool representatives,
                                          char **out);

/**
 * Whether `v` lies at distance `rho` from the code of the report.
 *
 * # Safety
 * `report` must be a live handle; `v` must point to `len` values; `out`
 * valid for writes.
 */
enum ExtcodeStatus extcode_report_is_deep_hole(const struct ExtcodeReport *report,
                                               const uint32_t *v,
                                               size_t len,
                                               bool *out);

/**
 * Whether `v` is a deep hole of `code`, computing the covering radius
 * with the default budget.
 *
 * # Safety
 * `code` must be a live handle; `v` must point to `len` values; `out`
 * valid for writes.
 */
enum ExtcodeStatus extcode_is_deep_hole(const struct ExtcodeCode *code,
                                        const uint32_t *v,
                                        size_t len,
                                        bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EXTCODE_H */

/* C interface to the witt12 library. Generated — do not edit. */

#ifndef WITT12_H
#define WITT12_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum {
  WITT12_OK = 0,
  /**
   * A required pointer argument was null.
   */
  WITT12_NULL_ARGUMENT = 1,
  /**
   * An argument was out of range or structurally invalid.
   */
  WITT12_INVALID_ARGUMENT = 2,
  /**
   * The operation needs a different plane order (most need q = 3).
   */
  WITT12_UNSUPPORTED_ORDER = 3,
  /**
   * The design file text did not parse.
   */
  WITT12_PARSE_ERROR = 4,
  /**
   * The input is not the required Steiner system.
   */
  WITT12_NOT_STEINER = 5,
  /**
   * The exhaustive scan would exceed the built-in guard.
   */
  WITT12_TOO_LARGE = 6,
  /**
   * An internal invariant failed (a bug; please report).
   */
  WITT12_INTERNAL = 7,
} witt12_status;

/**
 * Opaque handle to the small Witt design S(5,6,12).
 */
typedef struct witt12_design witt12_design;

/**
 * Opaque handle to a projective plane PG(2,q).
 */
typedef struct witt12_plane witt12_plane;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * A static description of a status code; never null.
 */
const char *witt12_status_message(int status);

/**
 * Builds PG(2,q) for a prime q <= 7 and stores the handle in `*out`.
 */
witt12_status witt12_plane_new(uint8_t q, witt12_plane **out);

/**
 * Releases a plane handle. Null is a no-op.
 */
void witt12_plane_free(witt12_plane *plane);

/**
 * The plane order q, or 0 for a null handle.
 */
uint8_t witt12_plane_order(const witt12_plane *plane);

/**
 * The number of points (= lines) of the plane, or 0 for a null handle.
 */
uint32_t witt12_plane_point_count(const witt12_plane *plane);

/**
 * Classifies all 1716 six-point subsets of PG(2,3). `counts` must point
 * to four u64 slots, filled with the totals for types 1..4; `total`
 * (optional) receives their sum.
 */
witt12_status witt12_census(const witt12_plane *plane, uint64_t *counts, uint64_t *total);

/**
 * Builds S(5,6,12) from the plane (q = 3 only) with distinguished point
 * `u` removed, and stores the handle in `*out`.
 */
witt12_status witt12_design_new(const witt12_plane *plane, uint8_t u, witt12_design **out);

/**
 * Releases a design handle. Null is a no-op.
 */
void witt12_design_free(witt12_design *design);

/**
 * The number of blocks (132), or 0 for a null handle.
 */
uint32_t witt12_design_block_count(const witt12_design *design);

/**
 * Per-type block counts. `counts` must point to three u32 slots,
 * filled with the A/B/C totals (36, 42, 54).
 */
witt12_status witt12_design_type_counts(const witt12_design *design, uint32_t *counts);

/**
 * Serializes the design to the design file format as a NUL-terminated
 * UTF-8 string in `*out`; release it with [`witt12_string_free`].
 */
witt12_status witt12_design_export(const witt12_design *design, char **out);

/**
 * Releases a string returned by this library. Null is a no-op.
 */
void witt12_string_free(char *s);

/**
 * Parses design file text and exhaustively checks whether every t-set
 * lies in exactly one block. `*is_steiner` receives 1 or 0;
 * `failure_count` (optional) receives the number of offending t-sets.
 * A completed check reports `WITT12_OK` even when the design fails it.
 */
witt12_status witt12_verify_text(const char *text,
                                 size_t t,
                                 int *is_steiner,
                                 uint64_t *failure_count);

/**
 * Enumerates the automorphism group of the design: `*order` receives
 * the group order (95040) and `sharply_5_transitive` (optional)
 * receives 1 iff every ordered 5-tuple pair is linked by exactly one
 * automorphism. Runs the full 95040-tuple search; takes a moment.
 */
witt12_status witt12_autgroup(const witt12_design *design,
                              uint64_t *order,
                              int *sharply_5_transitive);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WITT12_H */

/* Copyright 2026 the compass authors */
/* SPDX-License-Identifier: Apache-2.0 */

#ifndef COMPASS_H
#define COMPASS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum CompassStatus {
  COMPASS_STATUS_OK = 0,
  COMPASS_STATUS_NULL_POINTER = 1,
  COMPASS_STATUS_INVALID_UTF8 = 2,
  COMPASS_STATUS_PARSE = 3,
  COMPASS_STATUS_DIVISION_BY_ZERO = 4,
  COMPASS_STATUS_NEGATIVE_SQRT = 5,
  COMPASS_STATUS_UNSUPPORTED_POLYGON = 6,
  COMPASS_STATUS_OFF_GRID = 7,
  COMPASS_STATUS_OUT_OF_RANGE = 8,
  COMPASS_STATUS_INVALID_ARGUMENT = 9,
  COMPASS_STATUS_GEOMETRY = 10,
  COMPASS_STATUS_PANIC = 11,
} CompassStatus;

typedef enum CompassOp {
  COMPASS_OP_ADD = 0,
  COMPASS_OP_SUB = 1,
  COMPASS_OP_MUL = 2,
  COMPASS_OP_DIV = 3,
} CompassOp;

/**
 * A constructed regular polygon together with its trace.
 */
typedef struct CompassPolygon CompassPolygon;

/**
 * An exact constructible real.
 */
typedef struct CompassValue CompassValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *compass_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void compass_string_free(char *s);

/**
 * Parses the canonical text form (`p/q`, `(a + b*sqrt(r))`).
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum CompassStatus compass_value_parse(const char *text, struct CompassValue **out);

/**
 * The rational `numer / denom`.
 *
 * # Safety
 * `out` must be writable.
 */
enum CompassStatus compass_value_from_ratio(int64_t numer,
                                            int64_t denom,
                                            struct CompassValue **out);

/**
 * Releases a value. Null is ignored.
 *
 * # Safety
 * `v` must come from this library and not be freed twice.
 */
void compass_value_free(struct CompassValue *v);

/**
 * `a op b`.
 *
 * # Safety
 * `a`, `b` must be live values; `out` must be writable.
 */
enum CompassStatus compass_value_arith(enum CompassOp op,
                                       const struct CompassValue *a,
                                       const struct CompassValue *b,
                                       struct CompassValue **out);

/**
 * Non-negative square root.
 *
 * # Safety
 * `a` must be a live value; `out` must be writable.
 */
enum CompassStatus compass_value_sqrt(const struct CompassValue *a, struct CompassValue **out);

/**
 * Exact sign: -1, 0 or 1.
 *
 * # Safety
 * `a` must be a live value; `out` must be writable.
 */
enum CompassStatus compass_value_sign(const struct CompassValue *a, int32_t *out);

/**
 * Exact comparison: -1, 0 or 1.
 *
 * # Safety
 * `a`, `b` must be live values; `out` must be writable.
 */
enum CompassStatus compass_value_compare(const struct CompassValue *a,
                                         const struct CompassValue *b,
                                         int32_t *out);

/**
 * Canonical text form; release with `compass_string_free`.
 *
 * # Safety
 * `a` must be a live value; `out` must be writable.
 */
enum CompassStatus compass_value_to_string(const struct CompassValue *a, char **out);

/**
 * Radical notation such as `√(10 - 2√5)/4`.
 *
 * # Safety
 * `a` must be a live value; `out` must be writable.
 */
enum CompassStatus compass_value_pretty(const struct CompassValue *a, char **out);

/**
 * Correctly rounded decimal with `digits` places.
 *
 * # Safety
 * `a` must be a live value; `out` must be writable.
 */
enum CompassStatus compass_value_approx(const struct CompassValue *a, uint32_t digits, char **out);

/**
 * Exact sine and cosine of an angle in degrees given as text (`36`,
 * `7.5`, `15/2`).
 *
 * # Safety
 * `angle` must be a nul-terminated string; `sin_out`, `cos_out` writable.
 */
enum CompassStatus compass_sin_cos(const char *angle,
                                   struct CompassValue **sin_out,
                                   struct CompassValue **cos_out);

/**
 * Gauss-Wantzel verdict. `witness` receives the offending prime, or 0
 * when constructible.
 *
 * # Safety
 * `constructible` and `witness` must be writable.
 */
enum CompassStatus compass_gauss_constructible(uint64_t n, bool *constructible, uint64_t *witness);

/**
 * Constructs the regular n-gon for n in {3, 4, 5, 6, 10, 20}.
 *
 * # Safety
 * `out` must be writable.
 */
enum CompassStatus compass_polygon_construct(uint64_t n, struct CompassPolygon **out);

/**
 * Releases a polygon. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not be freed twice.
 */
void compass_polygon_free(struct CompassPolygon *p);

/**
 * Number of vertices.
 *
 * # Safety
 * `p` must be a live polygon; `out` must be writable.
 */
enum CompassStatus compass_polygon_vertex_count(const struct CompassPolygon *p, size_t *out);

/**
 * Coordinates of vertex `index`, counterclockwise from (1, 0).
 *
 * # Safety
 * `p` must be a live polygon; `x_out`, `y_out` must be writable.
 */
enum CompassStatus compass_polygon_vertex(const struct CompassPolygon *p,
                                          size_t index,
                                          struct CompassValue **x_out,
                                          struct CompassValue **y_out);

/**
 * Whether every exact regularity check passes.
 *
 * # Safety
 * `p` must be a live polygon; `out` must be writable.
 */
enum CompassStatus compass_polygon_verify(const struct CompassPolygon *p, bool *out);

/**
 * The construction trace as JSON.
 *
 * # Safety
 * `p` must be a live polygon; `out` must be writable.
 */
enum CompassStatus compass_polygon_trace_json(const struct CompassPolygon *p, char **out);

/**
 * The construction diagram as SVG with default settings.
 *
 * # Safety
 * `p` must be a live polygon; `out` must be writable.
 */
enum CompassStatus compass_polygon_svg(const struct CompassPolygon *p, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMPASS_H */

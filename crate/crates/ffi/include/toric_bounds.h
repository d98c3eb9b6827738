#ifndef TORIC_BOUNDS_H
#define TORIC_BOUNDS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every `tb_*` call.
 */
typedef enum TbStatus {
  TB_STATUS_OK = 0,
  TB_STATUS_NULL_POINTER = 1,
  TB_STATUS_INVALID_UTF8 = 2,
  TB_STATUS_PARSE_ERROR = 3,
  TB_STATUS_DEGENERATE_INPUT = 4,
  TB_STATUS_INVALID_ARGUMENT = 5,
  TB_STATUS_VERIFICATION_FAILED = 6,
  TB_STATUS_PANIC = 7,
} TbStatus;

/**
 * Opaque polygon handle.
 */
typedef struct TbPolygon TbPolygon;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *tb_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from a `tb_*` out-parameter and not have been freed.
 */
void tb_string_free(char *s);

/**
 * Releases a polygon handle. NULL is ignored.
 *
 * # Safety
 * `p` must come from a `tb_polygon_*` constructor and not have been freed.
 */
void tb_polygon_free(struct TbPolygon *p);

/**
 * Parses polygon JSON (`{"vertices": [["p/q", "p/q"], ...]}`) into its
 * canonical convex hull.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` a writable pointer slot.
 */
enum TbStatus tb_polygon_from_json(const char *json, struct TbPolygon **out);

/**
 * Convex hull of `len` lattice points `(xs[i], ys[i])`.
 *
 * # Safety
 * `xs` and `ys` must point to `len` readable values each.
 */
enum TbStatus tb_polygon_from_lattice_points(const int64_t *xs,
                                             const int64_t *ys,
                                             size_t len,
                                             struct TbPolygon **out);

/**
 * The triangle `P0 = conv{(1,0), (0,1), (-1,-1)}`.
 *
 * # Safety
 * `out` must be a writable pointer slot.
 */
enum TbStatus tb_polygon_p0(struct TbPolygon **out);

/**
 * `Q_k = k·P0 + Q0`, cross-checked against its closed-form vertex list.
 *
 * # Safety
 * `out` must be a writable pointer slot.
 */
enum TbStatus tb_polygon_qk(uint64_t k, struct TbPolygon **out);

/**
 * Minkowski sum of two polygons as a new handle.
 *
 * # Safety
 * `p`, `q` must be live handles; `out` a writable pointer slot.
 */
enum TbStatus tb_polygon_minkowski_sum(const struct TbPolygon *p,
                                       const struct TbPolygon *q,
                                       struct TbPolygon **out);

/**
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum TbStatus tb_polygon_vertex_count(const struct TbPolygon *p, size_t *out);

/**
 * Canonical polygon JSON.
 *
 * # Safety
 * `p` must be a live handle; `out` a writable string slot.
 */
enum TbStatus tb_polygon_to_json(const struct TbPolygon *p, char **out);

/**
 * Exact area as a rational string.
 *
 * # Safety
 * `p` must be a live handle; `out` a writable string slot.
 */
enum TbStatus tb_polygon_area(const struct TbPolygon *p, char **out);

/**
 * Width certificate JSON: `{"width":"p/q","direction":[a,b],"search_bound":B,...}`.
 *
 * # Safety
 * `p` must be a live handle; `out` a writable string slot.
 */
enum TbStatus tb_lattice_width(const struct TbPolygon *p, char **out);

/**
 * Mixed degree `area(P+Q) - area(P) - area(Q)` as a rational string.
 *
 * # Safety
 * `p`, `q` must be live handles; `out` a writable string slot.
 */
enum TbStatus tb_mixed_degree(const struct TbPolygon *p, const struct TbPolygon *q, char **out);

/**
 * Normal fan JSON: `{"rays":[{"normal":[a,b],"support":"p/q"}, ...]}`.
 *
 * # Safety
 * `p` must be a live handle; `out` a writable string slot.
 */
enum TbStatus tb_normal_fan(const struct TbPolygon *p, char **out);

/**
 * Delzant check. `out_detail` may be NULL; otherwise it receives JSON listing
 * the failing vertices and their determinants.
 *
 * # Safety
 * `p` must be a live handle; `out_is_delzant` writable; `out_detail` NULL or writable.
 */
enum TbStatus tb_delzant_check(const struct TbPolygon *p, bool *out_is_delzant, char **out_detail);

/**
 * Equivalence with `t·P0`. On a match `*out_found` is true and `out_witness`
 * (if non-NULL) receives `{"t":..,"matrix":..,"translation":..}`; otherwise it
 * is set to NULL.
 *
 * # Safety
 * `p` must be a live handle; `out_found` writable; `out_witness` NULL or writable.
 */
enum TbStatus tb_equiv_p0(const struct TbPolygon *p, bool *out_found, char **out_witness);

/**
 * Full bounds report as JSON.
 *
 * # Safety
 * `p` must be a live handle; `out` a writable string slot.
 */
enum TbStatus tb_bounds_report(const struct TbPolygon *p, char **out);

/**
 * Seshadri chain for `Q_k` (`k ≥ 1`) as JSON.
 *
 * # Safety
 * `out` must be a writable string slot.
 */
enum TbStatus tb_qk_seshadri_chain(uint64_t k, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_BOUNDS_H */

#ifndef HZBOUNDS_H
#define HZBOUNDS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HzGraphKind {
  HZ_GRAPH_KIND_BRUHAT = 0,
  HZ_GRAPH_KIND_QUANTUM = 1,
} HzGraphKind;

/**
 * Result code of every fallible call.
 */
typedef enum HzStatus {
  HZ_STATUS_OK = 0,
  HZ_STATUS_NULL_POINTER = 1,
  HZ_STATUS_INVALID_UTF8 = 2,
  HZ_STATUS_INVALID_TYPE = 3,
  HZ_STATUS_DIMENSION_MISMATCH = 4,
  HZ_STATUS_NOT_DOMINANT = 5,
  HZ_STATUS_PARSE = 6,
  HZ_STATUS_TOO_LARGE = 7,
  HZ_STATUS_CHECK_FAILED = 8,
  HZ_STATUS_UNSUPPORTED = 9,
  HZ_STATUS_PANIC = 10,
} HzStatus;

/**
 * Opaque result of a capacity computation.
 */
typedef struct HzBounds HzBounds;

/**
 * Opaque root system handle.
 */
typedef struct HzRootSystem HzRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null after a success.
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *hz_last_error(void);

/**
 * Library version as a static string.
 */
const char *hz_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void hz_string_free(char *s);

/**
 * Builds the root system of `family` ("A".."G") and `rank`.
 *
 * # Safety
 * `family` must be a NUL-terminated string, `out` a valid pointer.
 */
enum HzStatus hz_root_system_new(const char *family, size_t rank, struct HzRootSystem **out);

/**
 * # Safety
 * `rs` must be null or a handle from [`hz_root_system_new`], not yet freed.
 */
void hz_root_system_free(struct HzRootSystem *rs);

/**
 * Rank, ambient dimension and number of roots.
 *
 * # Safety
 * `rs` must be a live handle; each out pointer may be null.
 */
enum HzStatus hz_root_system_info(const struct HzRootSystem *rs,
                                  size_t *rank,
                                  size_t *ambient_dim,
                                  size_t *num_roots);

/**
 * Lower and upper capacity bounds for `lambda`, a comma separated list of
 * rationals such as `"3,2,1/2"`. `group_cap` bounds Weyl group enumeration; 0 means the default.
 *
 * # Safety
 * `rs` must be a live handle, `lambda` a NUL-terminated string, `out` a valid pointer.
 */
enum HzStatus hz_bounds_compute(const struct HzRootSystem *rs,
                                const char *lambda,
                                uint64_t group_cap,
                                struct HzBounds **out);

/**
 * # Safety
 * `b` must be null or a handle from [`hz_bounds_compute`], not yet freed.
 */
void hz_bounds_free(struct HzBounds *b);

/**
 * Lower bound as `"p/q"`.
 *
 * # Safety
 * `b` must be a live handle, `out` a valid pointer.
 */
enum HzStatus hz_bounds_lower(const struct HzBounds *b, char **out);

/**
 * Upper bound as `"p/q"`.
 *
 * # Safety
 * `b` must be a live handle, `out` a valid pointer.
 */
enum HzStatus hz_bounds_upper(const struct HzBounds *b, char **out);

/**
 * Exact capacity as `"p/q"` when known; otherwise `*out` is set to null.
 *
 * # Safety
 * `b` must be a live handle, `out` a valid pointer.
 */
enum HzStatus hz_bounds_exact(const struct HzBounds *b, char **out);

/**
 * Full report as JSON.
 *
 * # Safety
 * `b` must be a live handle, `out` a valid pointer.
 */
enum HzStatus hz_bounds_to_json(const struct HzBounds *b, char **out);

/**
 * 1-based index of the simple root attaining the lower bound, and whether every internal check passed.
 *
 * # Safety
 * `b` must be a live handle; each out pointer may be null.
 */
enum HzStatus hz_bounds_info(const struct HzBounds *b,
                             size_t *witness_simple,
                             bool *checks_pass);

/**
 * Capacity of the unitary orbit through the sorted spectrum `lambda`.
 *
 * # Safety
 * `lambda` must be a NUL-terminated string, `out` a valid pointer.
 */
enum HzStatus hz_unitary_capacity(const char *lambda, char **out);

/**
 * Diameter of the weighted Cayley graph of S_n, computed by search. `cap` bounds n; 0 means the default.
 *
 * # Safety
 * `lambda` must be a NUL-terminated string, `out` a valid pointer.
 */
enum HzStatus hz_cayley_diameter(const char *lambda,
                                 size_t cap,
                                 char **out);

/**
 * Weighted Cayley graph of S_n as JSON.
 *
 * # Safety
 * `lambda` must be a NUL-terminated string, `out` a valid pointer.
 */
enum HzStatus hz_cayley_graph_json(const char *lambda, size_t cap, char **out);

/**
 * Bruhat or quantum Bruhat graph as JSON. For the Bruhat graph a non-null
 * `lambda` selects the parabolic quotient by its stabilizer and adds edge areas.
 *
 * # Safety
 * `rs` must be a live handle, `lambda` null or a NUL-terminated string, `out` a valid pointer.
 */
enum HzStatus hz_graph_json(const struct HzRootSystem *rs,
                            enum HzGraphKind kind,
                            const char *lambda,
                            uint64_t group_cap,
                            char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HZBOUNDS_H */

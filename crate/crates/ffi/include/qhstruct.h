#ifndef QHSTRUCT_H
#define QHSTRUCT_H

/* Generated by cbindgen from the qhstruct-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum QhStatus {
  QhStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  QhStatus_NullArgument = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  QhStatus_InvalidUtf8 = 2,
  /**
   * The algebra description did not parse or build.
   */
  QhStatus_ParseFailed = 3,
  /**
   * An order or word argument was malformed for this algebra.
   */
  QhStatus_InvalidOrder = 4,
  /**
   * The computation itself refused (too many vertices, endpoint not
   * quasi-hereditary, ...); see the message in the out parameter.
   */
  QhStatus_Failed = 5,
} QhStatus;

/**
 * Opaque algebra handle.
 */
typedef struct QhAlgebra QhAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses and builds an algebra from its text description.
 *
 * Returns null on failure; when `error_out` is non-null it then receives
 * a message (free it with `qh_string_free`).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string or null. `error_out` must
 * be null or point to writable memory.
 */
struct QhAlgebra *qh_algebra_parse(const char *text, char **error_out);

/**
 * Releases a handle from `qh_algebra_parse`. Null is a no-op.
 *
 * # Safety
 * `alg` must be null or a pointer obtained from `qh_algebra_parse` that
 * has not been freed yet.
 */
void qh_algebra_free(struct QhAlgebra *alg);

/**
 * Number of vertices (simple modules); 0 for null.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
uintptr_t qh_algebra_vertices(const struct QhAlgebra *alg);

/**
 * Total dimension over the base field; 0 for null.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
uintptr_t qh_algebra_dimension(const struct QhAlgebra *alg);

/**
 * Quasi-heredity check for one order (one-line notation, e.g. "1,2,4,3").
 * On `Ok`, `json_out` receives the same JSON `qh check --json` prints.
 *
 * # Safety
 * `alg` must be a live handle, `order` a valid NUL-terminated string;
 * `json_out` must be null or point to writable memory.
 */
enum QhStatus qh_check_json(const struct QhAlgebra *alg, const char *order, char **json_out);

/**
 * Enumerates all quasi-hereditary orders; `strategy` is "brute" or "bfs".
 *
 * # Safety
 * Same contract as `qh_check_json`.
 */
enum QhStatus qh_enumerate_json(const struct QhAlgebra *alg, const char *strategy, char **json_out);

/**
 * Certified twist path between two quasi-hereditary orders.
 *
 * # Safety
 * Same contract as `qh_check_json`.
 */
enum QhStatus qh_connect_json(const struct QhAlgebra *alg,
                              const char *from,
                              const char *to,
                              char **json_out);

/**
 * Releases any string handed out by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string obtained from this library that has not
 * been freed yet.
 */
void qh_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QHSTRUCT_H */

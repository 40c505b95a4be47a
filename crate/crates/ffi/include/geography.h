/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef GEOGRAPHY_H
#define GEOGRAPHY_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum GeoStatus {
  GEO_STATUS_OK = 0,
  GEO_STATUS_NULL_POINTER = 1,
  GEO_STATUS_INVALID_UTF8 = 2,
  GEO_STATUS_PARSE = 3,
  GEO_STATUS_BUDGET_EXCEEDED = 4,
  GEO_STATUS_DEGREE_VIOLATION = 5,
  GEO_STATUS_INVALID_ARGUMENT = 6,
  GEO_STATUS_PANIC = 7,
} GeoStatus;

/**
 * Algorithm used by [`geo_grundy`].
 */
typedef enum GeoMethod {
  /**
   * Degree-3 algorithm when every vertex has degree at most 3, otherwise
   * branch and bound.
   */
  GEO_METHOD_AUTO = 0,
  GEO_METHOD_EXACT = 1,
  GEO_METHOD_DEGREE3 = 2,
  GEO_METHOD_BRANCH_AND_BOUND = 3,
} GeoMethod;

/**
 * An undirected board with a token. Opaque to C.
 */
typedef struct GeoPosition GeoPosition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a board in JSON or edge-list form.
 *
 * # Safety
 * `text_in` must be a nul-terminated string and `out` a writable pointer.
 */
enum GeoStatus geo_position_parse(const char *text_in, struct GeoPosition **out);

/**
 * Releases a position. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not be used afterwards.
 */
void geo_position_free(struct GeoPosition *p);

/**
 * Number of vertices on the board.
 *
 * # Safety
 * `p` must be a live position and `out` writable.
 */
enum GeoStatus geo_position_vertex_count(const struct GeoPosition *p, size_t *out);

/**
 * Whether the player to move wins.
 *
 * # Safety
 * `p` must be a live position and `out` writable.
 */
enum GeoStatus geo_is_winnable(const struct GeoPosition *p, bool *out);

/**
 * A vertex to move to that wins, or -1 when the mover loses.
 *
 * # Safety
 * `p` must be a live position and `out` writable.
 */
enum GeoStatus geo_winning_move(const struct GeoPosition *p, int64_t *out);

/**
 * Grundy value of the position. `max_states == 0` uses the default budget.
 *
 * # Safety
 * `p` must be a live position and `out` writable.
 */
enum GeoStatus geo_grundy(const struct GeoPosition *p,
                          enum GeoMethod method,
                          uint64_t max_states,
                          uint32_t *out);

/**
 * Builds a position of value `nimber`. With `tree` set, uses the
 * exponential-size tree, capped at value 10.
 *
 * # Safety
 * `out` must be writable.
 */
enum GeoStatus geo_construct(uint32_t nimber, bool tree, struct GeoPosition **out);

/**
 * Maps a directed board to an undirected one that is `*` exactly when the
 * directed mover loses. With `prelude` set, the result is `*` or `*2`.
 *
 * # Safety
 * `text_in` must be a nul-terminated string and `out` writable.
 */
enum GeoStatus geo_gg_to_ug(const char *text_in, bool prelude, struct GeoPosition **out);

/**
 * Canonical JSON for the position. Free the result with [`geo_string_free`].
 *
 * # Safety
 * `p` must be a live position and `out` writable.
 */
enum GeoStatus geo_position_to_json(const struct GeoPosition *p, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void geo_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into the library from this thread.
 */
const char *geo_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GEOGRAPHY_H */

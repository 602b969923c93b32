#ifndef MXK_H
#define MXK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every entry point.
 */
typedef enum MxkStatus {
  MXK_STATUS_OK = 0,
  MXK_STATUS_NULL_POINTER = 1,
  MXK_STATUS_INVALID_ARGUMENT = 2,
  MXK_STATUS_PARSE = 3,
  MXK_STATUS_CAP_EXCEEDED = 4,
  MXK_STATUS_UNKNOWN_ELEMENT = 5,
  MXK_STATUS_IO = 6,
  MXK_STATUS_CHECK_FAILED = 7,
  MXK_STATUS_PANIC = 8,
} MxkStatus;

/**
 * Opaque matroid handle.
 */
typedef struct MxkMatroid MxkMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *mxk_version(void);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on the same thread.
 */
const char *mxk_last_error(void);

/**
 * Free a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void mxk_string_free(char *s);

/**
 * Free a matroid handle. Null is ignored.
 *
 * # Safety
 * `m` must come from this library and not have been freed.
 */
void mxk_matroid_free(struct MxkMatroid *m);

/**
 * PG(n-1, q).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum MxkStatus mxk_projective_geometry(size_t n, uint64_t q, struct MxkMatroid **out);

/**
 * AG(n-1, q).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum MxkStatus mxk_affine_geometry(size_t n, uint64_t q, struct MxkMatroid **out);

/**
 * The (n, q, t)-crown.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum MxkStatus mxk_crown(size_t n, uint64_t q, size_t t, struct MxkMatroid **out);

/**
 * M(K_t).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum MxkStatus mxk_complete_graphic(size_t t, struct MxkMatroid **out);

/**
 * The Dowling geometry of rank `n` over the cyclic group of order `k`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum MxkStatus mxk_dowling_cyclic(size_t n, size_t k, struct MxkMatroid **out);

/**
 * Parse an instance in the text format (linear, graphic, biased graph or
 * graph) and return its matroid.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum MxkStatus mxk_matroid_parse(const char *text, struct MxkMatroid **out);

/**
 * Number of elements.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum MxkStatus mxk_matroid_size(const struct MxkMatroid *m, size_t *out);

/**
 * Rank of the matroid.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum MxkStatus mxk_matroid_rank(const struct MxkMatroid *m, size_t *out);

/**
 * Number of points (rank-1 flats).
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum MxkStatus mxk_matroid_epsilon(const struct MxkMatroid *m, size_t *out);

/**
 * Rank of the set `ids[0..len]`.
 *
 * # Safety
 * `m` must be a live handle, `ids` must hold `len` values, `out` valid.
 */
enum MxkStatus mxk_matroid_rank_of(const struct MxkMatroid *m,
                                   const size_t *ids_ptr,
                                   size_t len,
                                   size_t *out);

/**
 * The minor `m / contract \ delete` as a new handle.
 *
 * # Safety
 * `m` must be a live handle; the arrays must hold the given counts.
 */
enum MxkStatus mxk_matroid_minor(const struct MxkMatroid *m,
                                 const size_t *contract,
                                 size_t contract_len,
                                 const size_t *delete_,
                                 size_t delete_len,
                                 struct MxkMatroid **out);

/**
 * Whether `m` has a `U_{2,k}`-minor. When `witness` is not null it receives
 * the witness text (or null), to be freed with `mxk_string_free`.
 *
 * # Safety
 * `m` must be a live handle and `found` a valid pointer.
 */
enum MxkStatus mxk_has_line_minor(const struct MxkMatroid *m,
                                  size_t k,
                                  bool *found,
                                  char **witness);

/**
 * Whether `m` has an `M(K_t)`-minor; witness as in `mxk_has_line_minor`.
 *
 * # Safety
 * `m` must be a live handle and `found` a valid pointer.
 */
enum MxkStatus mxk_has_clique_minor(const struct MxkMatroid *m,
                                    size_t t,
                                    bool *found,
                                    char **witness);

/**
 * `w_n(m)`: the number of n-towers of the simplification.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum MxkStatus mxk_count_towers(const struct MxkMatroid *m, size_t n, uint64_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MXK_H */

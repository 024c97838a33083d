#ifndef FIBCUBE_H
#define FIBCUBE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define FIBCUBE_FAMILY_Q 0

#define FIBCUBE_FAMILY_GAMMA 1

#define FIBCUBE_FAMILY_LAMBDA 2

#define FIBCUBE_FAMILY_GAMMABAR 3

/**
 * Result code of every call.
 */
typedef enum FibcubeStatus {
  FIBCUBE_STATUS_OK = 0,
  FIBCUBE_STATUS_NULL_POINTER = 1,
  FIBCUBE_STATUS_INVALID_ARGUMENT = 2,
  FIBCUBE_STATUS_CAP_EXCEEDED = 3,
  FIBCUBE_STATUS_OVERFLOW = 4,
  FIBCUBE_STATUS_NOT_MEMBER = 5,
  FIBCUBE_STATUS_UNSUPPORTED = 6,
  FIBCUBE_STATUS_INTERNAL = 7,
  FIBCUBE_STATUS_PANIC = 8,
} FibcubeStatus;

/**
 * Opaque graph handle. Create with `fibcube_graph_new`, release with
 * `fibcube_graph_free`.
 */
typedef struct FibcubeGraph FibcubeGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds `Q_n`, `Γ_n`, `Λ_n` or `Γ̄_n` with the default enumeration cap.
 *
 * # Safety
 * `out` must be null or point to writable storage for a handle pointer.
 */
enum FibcubeStatus fibcube_graph_new(uint32_t family_code, uint32_t n, struct FibcubeGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle from `fibcube_graph_new` not yet freed.
 */
void fibcube_graph_free(struct FibcubeGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum FibcubeStatus fibcube_graph_dimension(const struct FibcubeGraph *g, uint32_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum FibcubeStatus fibcube_graph_vertex_count(const struct FibcubeGraph *g, uint64_t *out);

/**
 * Edge count by enumeration.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum FibcubeStatus fibcube_graph_edge_count(const struct FibcubeGraph *g, uint64_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum FibcubeStatus fibcube_graph_contains(const struct FibcubeGraph *g, uint64_t bits, bool *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum FibcubeStatus fibcube_graph_degree(const struct FibcubeGraph *g, uint64_t bits, uint32_t *out);

/**
 * Sum of endpoint degree differences over all edges, by enumeration.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum FibcubeStatus fibcube_graph_irregularity(const struct FibcubeGraph *g, uint64_t *out);

/**
 * `F_k` with `F_0 = 0`, `F_1 = 1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum FibcubeStatus fibcube_fibonacci(uint32_t k, uint64_t *out);

/**
 * Edge count from the closed forms.
 *
 * # Safety
 * `out` must be writable.
 */
enum FibcubeStatus fibcube_edge_count(uint32_t family_code, uint32_t n, uint64_t *out);

/**
 * `|E(Γ̄_n)|` from the closed forms.
 *
 * # Safety
 * `out` must be writable.
 */
enum FibcubeStatus fibcube_complement_edge_count(uint32_t n, uint64_t *out);

/**
 * Irregularity from the closed forms; `FIBCUBE_FAMILY_GAMMABAR` is unsupported.
 *
 * # Safety
 * `out` must be writable.
 */
enum FibcubeStatus fibcube_irregularity(uint32_t family_code, uint32_t n, uint64_t *out);

/**
 * Imbalance (0, 1 or 2) of the edge `{x, x + e_dir}` of `Γ_n` or `Λ_n`,
 * where `x = (upper_bits, n)` has a 1 at `dir`.
 *
 * # Safety
 * `out` must be writable.
 */
enum FibcubeStatus fibcube_imbalance(uint32_t family_code,
                                     uint32_t n,
                                     uint64_t upper_bits,
                                     uint32_t dir,
                                     uint32_t *out);

/**
 * Image of a Fibonacci string of length `n >= 4` in `Γ̄_n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum FibcubeStatus fibcube_embed(uint32_t n, uint64_t bits, uint64_t *out);

/**
 * Static description of a status code.
 */
const char *fibcube_status_message(enum FibcubeStatus status);

/**
 * Detail of the last failure on this thread, or "" after a success. The
 * pointer stays valid until the next call on the same thread.
 */
const char *fibcube_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIBCUBE_H */

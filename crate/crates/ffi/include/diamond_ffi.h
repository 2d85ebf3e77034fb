#ifndef DIAMOND_FFI_H
#define DIAMOND_FFI_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum DgStatus {
  DG_STATUS_OK = 0,
  /**
   * A required pointer was null or a string was not UTF-8.
   */
  DG_STATUS_INVALID_ARGUMENT = 1,
  /**
   * A diagram, poset or JSON document did not parse.
   */
  DG_STATUS_PARSE_ERROR = 2,
  /**
   * A size budget was exceeded.
   */
  DG_STATUS_BUDGET_EXCEEDED = 3,
  /**
   * The graph is valid but some 2-interval has more than two middle vertices.
   */
  DG_STATUS_NOT_DIAMOND = 4,
  /**
   * Any other failure, including a caught panic.
   */
  DG_STATUS_INTERNAL = 5,
} DgStatus;

/**
 * A graded graph together with the budgets it was built under.
 */
typedef struct DgGraph DgGraph;

/**
 * The path group of a graph.
 */
typedef struct DgGroup DgGroup;

/**
 * Size budgets; pass a null pointer for the defaults.
 */
typedef struct DgLimits {
  size_t vertices;
  size_t paths;
  size_t poset_elements;
} DgLimits;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *dg_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void dg_string_free(char *s);

/**
 * Hasse diagram of the Boolean lattice on `n` atoms.
 *
 * # Safety
 * `limits` may be null; `out` must be valid for writes.
 */
enum DgStatus dg_graph_boolean(uint32_t n, const struct DgLimits *limits, struct DgGraph **out);

/**
 * Interval from the origin to `target[0..len]` in the Pascal graph of dimension `len >= 2`.
 *
 * # Safety
 * `target` must point to `len` readable values; `out` must be valid for writes.
 */
enum DgStatus dg_graph_pascal(const uint32_t *target,
                              size_t len,
                              const struct DgLimits *limits,
                              struct DgGraph **out);

/**
 * Young interval `[mu, lambda]`, both given as comma-separated parts such as
 * `"4,2,2"`. A null `mu` means the empty diagram.
 *
 * # Safety
 * `lambda` must be a valid C string, `mu` null or a valid C string, `out` valid for writes.
 */
enum DgStatus dg_graph_young(const char *lambda,
                             const char *mu,
                             const struct DgLimits *limits,
                             struct DgGraph **out);

/**
 * Lattice of order ideals of a poset given as relations, e.g. `"a<c,b<c"`.
 *
 * # Safety
 * `relations` must be a valid C string; `out` must be valid for writes.
 */
enum DgStatus dg_graph_ideals(const char *relations,
                              const struct DgLimits *limits,
                              struct DgGraph **out);

/**
 * Parses the JSON form `{"n", "levels", "edges"}`.
 *
 * # Safety
 * `json` must be a valid C string; `out` must be valid for writes.
 */
enum DgStatus dg_graph_from_json(const char *json,
                                 const struct DgLimits *limits,
                                 struct DgGraph **out);

/**
 * # Safety
 * `g` must be null or a live handle from this library.
 */
void dg_graph_free(struct DgGraph *g);

/**
 * Number of levels minus one.
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid for writes.
 */
enum DgStatus dg_graph_rank(const struct DgGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be valid for writes.
 */
enum DgStatus dg_graph_vertex_count(const struct DgGraph *g, size_t *out);

/**
 * Number of maximal paths as a decimal string.
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid for writes.
 */
enum DgStatus dg_graph_path_count(const struct DgGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be valid for writes.
 */
enum DgStatus dg_graph_to_json(const struct DgGraph *g, char **out);

/**
 * Enumerates the maximal paths and builds the group generated by the
 * combinatorial involutions.
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid for writes.
 */
enum DgStatus dg_group_new(const struct DgGraph *g, struct DgGroup **out);

/**
 * # Safety
 * `grp` must be null or a live handle from this library.
 */
void dg_group_free(struct DgGroup *grp);

/**
 * Number of maximal paths the group acts on.
 *
 * # Safety
 * `grp` must be a live handle; `out` must be valid for writes.
 */
enum DgStatus dg_group_degree(const struct DgGroup *grp, size_t *out);

/**
 * Exact group order as a decimal string.
 *
 * # Safety
 * `grp` must be a live handle not used concurrently; `out` must be valid for writes.
 */
enum DgStatus dg_group_order(struct DgGroup *grp, char **out);

/**
 * Classification as JSON: tag, N, k, order, transitivity flags,
 * generators_even, d_verified and blocks.
 *
 * # Safety
 * `grp` must be a live handle not used concurrently; `out` must be valid for writes.
 */
enum DgStatus dg_group_classify_json(struct DgGroup *grp, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIAMOND_FFI_H */

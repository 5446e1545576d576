#ifndef FORESTPOLY_H
#define FORESTPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum FpStatus {
  FP_STATUS_OK = 0,
  FP_STATUS_NULL_POINTER = 1,
  FP_STATUS_INVALID_UTF8 = 2,
  FP_STATUS_INVALID_INPUT = 3,
  FP_STATUS_PANIC = 4,
} FpStatus;

/**
 * Opaque graph handle.
 */
typedef struct FpGraph FpGraph;

/**
 * Opaque polynomial handle.
 */
typedef struct FpPolynomial FpPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *fp_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void fp_string_free(char *s);

/**
 * Parses `{"n": ..., "edges": [[u, v], ...]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum FpStatus fp_graph_from_json(const char *json, struct FpGraph **out);

/**
 * Builds a graph from `edge_count` pairs stored flat in `edges`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` values (or may be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum FpStatus fp_graph_new(size_t n, const size_t *edges, size_t edge_count, struct FpGraph **out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum FpStatus fp_graph_complement(const struct FpGraph *g, struct FpGraph **out);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t fp_graph_vertex_count(const struct FpGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum FpStatus fp_graph_to_json(const struct FpGraph *g, char **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, not yet freed.
 */
void fp_graph_free(struct FpGraph *g);

/**
 * The spanning rooted forest polynomial of `g`, by exhaustive enumeration.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum FpStatus fp_forest_polynomial(const struct FpGraph *g, struct FpPolynomial **out);

/**
 * The right-hand side of the reciprocity identity for `g`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum FpStatus fp_reciprocity_rhs(const struct FpGraph *g, struct FpPolynomial **out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum FpStatus fp_verify_reciprocity(const struct FpGraph *g, bool *out);

/**
 * Spanning tree count of `g` itself as a decimal string.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum FpStatus fp_spanning_tree_count(const struct FpGraph *g, char **out);

/**
 * Canonical text form, e.g. `x + x1 + x2`.
 *
 * # Safety
 * `p` must be a live polynomial handle; `out` must be writable.
 */
enum FpStatus fp_polynomial_to_string(const struct FpPolynomial *p, char **out);

/**
 * Evaluates at `values[0..len]` (`x` first) and writes the exact value as
 * a decimal string.
 *
 * # Safety
 * `p` must be a live polynomial handle, `values` must point to `len`
 * integers, `out` must be writable.
 */
enum FpStatus fp_polynomial_evaluate(const struct FpPolynomial *p,
                                     const int64_t *values,
                                     size_t len,
                                     char **out);

/**
 * # Safety
 * `a` and `b` must be live polynomial handles; `out` must be writable.
 */
enum FpStatus fp_polynomial_equal(const struct FpPolynomial *a,
                                  const struct FpPolynomial *b,
                                  bool *out);

/**
 * # Safety
 * `p` must be null or a handle from this library, not yet freed.
 */
void fp_polynomial_free(struct FpPolynomial *p);

/**
 * Applies `phi` to an A pair document and writes the B pair document.
 *
 * # Safety
 * `pair_a_json` must be a nul-terminated string; `out` must be writable.
 */
enum FpStatus fp_phi_json(const char *pair_a_json, char **out);

/**
 * Applies `psi` to a B pair document and writes the A pair document.
 *
 * # Safety
 * `pair_b_json` must be a nul-terminated string; `out` must be writable.
 */
enum FpStatus fp_psi_json(const char *pair_b_json, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FORESTPOLY_H */

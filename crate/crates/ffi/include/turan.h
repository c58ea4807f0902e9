#ifndef TURAN_H
#define TURAN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum TuranStatus {
  TURAN_STATUS_OK = 0,
  TURAN_STATUS_NULL_POINTER = 1,
  TURAN_STATUS_INVALID_ARGUMENT = 2,
  TURAN_STATUS_PARSE_ERROR = 3,
  TURAN_STATUS_BUDGET_EXHAUSTED = 4,
  TURAN_STATUS_COMPUTE_FAILED = 5,
  TURAN_STATUS_PANIC = 6,
} TuranStatus;

/**
 * Opaque graph handle.
 */
typedef struct TuranGraph TuranGraph;

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into this library on the same thread.
 */
const char *turan_last_error(void);

/**
 * Parses the `p edge` / `e u v` text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum TuranStatus turan_graph_parse(const char *text, struct TuranGraph **out);

/**
 * Builds a graph on `n` vertices from `m` pairs `(us[i], vs[i])`.
 *
 * # Safety
 * `us` and `vs` must each point to `m` readable values (or be NULL when
 * `m == 0`); `out` must be writable.
 */
enum TuranStatus turan_graph_from_edges(size_t n,
                                        const size_t *us,
                                        const size_t *vs,
                                        size_t m,
                                        struct TuranGraph **out);

/**
 * Builds a pattern from shorthand (`K4`, `C5`, `P3`, `S3`, `M2`, `@file`).
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum TuranStatus turan_graph_pattern(const char *spec, struct TuranGraph **out);

/**
 * Releases a handle; NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not be freed twice.
 */
void turan_graph_free(struct TuranGraph *g);

/**
 * Vertex count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t turan_graph_vertex_count(const struct TuranGraph *g);

/**
 * Edge count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t turan_graph_edge_count(const struct TuranGraph *g);

/**
 * Writes the graph in the text format; free the result with `turan_string_free`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum TuranStatus turan_graph_write(const struct TuranGraph *g, char **out);

/**
 * Releases a string returned by this library; NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void turan_string_free(char *s);

/**
 * Number of copies of `t` in `g`.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum TuranStatus turan_count_copies(const struct TuranGraph *g,
                                    const struct TuranGraph *t,
                                    uint64_t *out);

/**
 * Whether `g` contains no member of the family as a subgraph.
 *
 * # Safety
 * `members` must point to `len` live handles; `out` must be writable.
 */
enum TuranStatus turan_is_family_free(const struct TuranGraph *g,
                                      const struct TuranGraph *const *members,
                                      size_t len,
                                      bool *out);

/**
 * Whether some homomorphism maps `f` into `g`.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum TuranStatus turan_hom_exists(const struct TuranGraph *f,
                                  const struct TuranGraph *g,
                                  bool *out);

/**
 * `ex(G, T, F)`. `witness` may be NULL; otherwise it receives a new handle.
 * A `node_budget` of 0 selects the default.
 *
 * # Safety
 * Handles must be live; `members` must point to `len` live handles;
 * `value` must be writable.
 */
enum TuranStatus turan_exact_ex(const struct TuranGraph *g,
                                const struct TuranGraph *t,
                                const struct TuranGraph *const *members,
                                size_t len,
                                uint64_t node_budget,
                                size_t threads,
                                uint64_t *value,
                                struct TuranGraph **witness);

/**
 * Size of a maximum matching.
 *
 * # Safety
 * `g` must be live; `out` must be writable.
 */
enum TuranStatus turan_max_matching(const struct TuranGraph *g, size_t *out);

/**
 * Most edges in a subgraph of maximum degree at most `t`. `witness` may be NULL.
 *
 * # Safety
 * `g` must be live; `value` must be writable.
 */
enum TuranStatus turan_max_edges_bounded_degree(const struct TuranGraph *g,
                                                size_t t,
                                                uint64_t *value,
                                                struct TuranGraph **witness);

/**
 * Runs the approximation pipeline with default settings and returns its
 * report as JSON (free with `turan_string_free`). `eps` is `"a/b"` or a decimal.
 *
 * # Safety
 * Handles must be live; `members` must point to `len` live handles;
 * `eps` must be NUL-terminated; `json` must be writable.
 */
enum TuranStatus turan_approx_ex(const struct TuranGraph *g,
                                 const struct TuranGraph *t,
                                 const struct TuranGraph *const *members,
                                 size_t len,
                                 const char *eps,
                                 char **json);

#endif  /* TURAN_H */

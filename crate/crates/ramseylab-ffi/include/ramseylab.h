#ifndef RAMSEYLAB_H
#define RAMSEYLAB_H

/* Generated by cbindgen from ramseylab-ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this interface.
 */
typedef enum RlStatus {
  /**
   * The call succeeded.
   */
  RL_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  RL_STATUS_NULL_POINTER = 1,
  /**
   * An argument was outside the supported domain.
   */
  RL_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A pattern spec, graph, or coloring failed to parse.
   */
  RL_STATUS_PARSE_ERROR = 3,
  /**
   * The search gave up because it reached the configured order limit.
   */
  RL_STATUS_LIMIT_EXCEEDED = 4,
  /**
   * A file read failed.
   */
  RL_STATUS_IO_ERROR = 5,
  /**
   * The library panicked; treat the handle state as poisoned.
   */
  RL_STATUS_INTERNAL_ERROR = 6,
} RlStatus;

/**
 * Opaque edge-coloring handle.
 */
typedef struct RlColoring RlColoring;

/**
 * Opaque simple graph handle.
 */
typedef struct RlGraph RlGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread. Never free it.
 */
const char *rl_last_error_message(void);

/**
 * Release a string returned by this library.
 */
void rl_string_free(char *s);

/**
 * Build a graph from a pattern spec such as "clique:3", "path:4",
 * "cycle:5", "hkn:2,3", "gkn:2,3", "hprime:2,6", or "file:PATH".
 */
enum RlStatus rl_graph_from_pattern(const char *spec, struct RlGraph **out);

/**
 * Parse a graph from its text format.
 */
enum RlStatus rl_graph_parse(const char *text, struct RlGraph **out);

/**
 * Render a graph to its text format. Free the result with rl_string_free.
 */
enum RlStatus rl_graph_to_text(const struct RlGraph *graph, char **out);

/**
 * Number of vertices; 0 when the handle is null.
 */
size_t rl_graph_vertex_count(const struct RlGraph *graph);

/**
 * Number of edges; 0 when the handle is null.
 */
size_t rl_graph_edge_count(const struct RlGraph *graph);

/**
 * Degeneracy of the graph; 0 when the handle is null.
 */
size_t rl_graph_degeneracy(const struct RlGraph *graph);

/**
 * Release a graph handle.
 */
void rl_graph_free(struct RlGraph *graph);

/**
 * Two-colored Turan witness on k*n vertices: color 0 inside the k blocks
 * of size n, color 1 across blocks.
 */
enum RlStatus rl_coloring_turan(size_t k, size_t n, struct RlColoring **out);

/**
 * Product coloring: n blocks per base vertex, a fresh color inside blocks,
 * base colors across them.
 */
enum RlStatus rl_coloring_product(const struct RlColoring *base, size_t n, struct RlColoring **out);

/**
 * Seeded uniform random q-coloring of the complete graph on n vertices.
 */
enum RlStatus rl_coloring_random(size_t n, uint8_t q, uint64_t seed, struct RlColoring **out);

/**
 * Parse a coloring from its text format.
 */
enum RlStatus rl_coloring_parse(const char *text, struct RlColoring **out);

/**
 * Render a coloring to its text format. Free the result with
 * rl_string_free.
 */
enum RlStatus rl_coloring_to_text(const struct RlColoring *coloring, char **out);

/**
 * Number of vertices; 0 when the handle is null.
 */
size_t rl_coloring_vertex_count(const struct RlColoring *coloring);

/**
 * Number of colors; 0 when the handle is null.
 */
uint8_t rl_coloring_color_count(const struct RlColoring *coloring);

/**
 * Color of edge {u, v}, or -1 when the handle is null, u equals v, or a
 * vertex is out of range.
 */
int32_t rl_coloring_edge_color(const struct RlColoring *coloring, size_t u, size_t v);

/**
 * Release a coloring handle.
 */
void rl_coloring_free(struct RlColoring *coloring);

/**
 * Check whether the coloring has no monochromatic copy of the pattern in
 * any color. Writes true into out_is_free when it is copy-free.
 */
enum RlStatus rl_verify_free(const struct RlColoring *coloring,
                             const struct RlGraph *pattern,
                             bool *out_is_free);

/**
 * Decide whether every q-coloring of the complete graph on n vertices
 * contains a monochromatic copy of the pattern. Pass 0 for max_n or
 * workers to use the defaults.
 */
enum RlStatus rl_arrows(size_t n,
                        const struct RlGraph *pattern,
                        uint8_t q,
                        size_t max_n,
                        size_t workers,
                        bool *out_arrows);

/**
 * Smallest N whose complete graph arrows the pattern in q colors. Returns
 * RL_STATUS_LIMIT_EXCEEDED when no such N at or below the limit exists.
 * Pass 0 for max_n or workers to use the defaults.
 */
enum RlStatus rl_ramsey_number(const struct RlGraph *pattern,
                               uint8_t q,
                               size_t max_n,
                               size_t workers,
                               size_t *out_value);

/**
 * First-moment bound k! C(N,k) 2^(1 - d k / 2) on monochromatic copies of
 * a k-vertex d-regular pattern, evaluated to double precision.
 */
enum RlStatus rl_expected_mono_copies(uint64_t k, uint64_t d, uint64_t n, double *out_value);

/**
 * Largest epsilon for which a two-coloring is epsilon-balanced, evaluated
 * to double precision.
 */
enum RlStatus rl_balance_epsilon_star(const struct RlColoring *coloring, double *out_value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RAMSEYLAB_H */

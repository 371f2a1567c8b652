#ifndef SOMBOR_H
#define SOMBOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define SOMBOR_INDEX_SO 0

#define SOMBOR_INDEX_SO_RED 1

#define SOMBOR_DIRECTION_MAX 0

#define SOMBOR_DIRECTION_MIN 1

/**
 * Pass as the diameter to search every diameter.
 */
#define SOMBOR_ANY_DIAMETER -1

typedef enum SomborStatus {
  SOMBOR_STATUS_OK = 0,
  SOMBOR_STATUS_NULL_POINTER = 1,
  SOMBOR_STATUS_INPUT = 2,
  SOMBOR_STATUS_STRUCTURE = 3,
  SOMBOR_STATUS_CAPABILITY = 4,
  SOMBOR_STATUS_DOMAIN = 5,
  SOMBOR_STATUS_PANIC = 6,
  SOMBOR_STATUS_BUFFER_TOO_SMALL = 7,
} SomborStatus;

typedef struct SomborExtremal SomborExtremal;

typedef struct SomborGraph SomborGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to fit) and returns its full length.
 */
size_t sombor_last_error(char *buf, size_t cap);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2 * m`
 * consecutive endpoints.
 */
enum SomborStatus sombor_graph_from_edges(size_t n,
                                          const size_t *endpoints,
                                          size_t m,
                                          struct SomborGraph **out);

/**
 * Parses the `n m` / `u v` text format from a NUL-terminated string.
 */
enum SomborStatus sombor_graph_from_text(const char *text, struct SomborGraph **out);

void sombor_graph_free(struct SomborGraph *g);

enum SomborStatus sombor_graph_order(const struct SomborGraph *g, size_t *out);

enum SomborStatus sombor_graph_size(const struct SomborGraph *g, size_t *out);

/**
 * Fails with `Structure` on a disconnected graph.
 */
enum SomborStatus sombor_graph_diameter(const struct SomborGraph *g, size_t *out);

enum SomborStatus sombor_graph_is_unicyclic(const struct SomborGraph *g, bool *out);

enum SomborStatus sombor_graph_to_text(const struct SomborGraph *g,
                                       char *buf,
                                       size_t cap,
                                       size_t *len_out);

/**
 * Canonical certificate as lowercase hex; equal strings mean isomorphic graphs.
 */
enum SomborStatus sombor_graph_certificate_hex(const struct SomborGraph *g,
                                               char *buf,
                                               size_t cap,
                                               size_t *len_out);

enum SomborStatus sombor_index_value(const struct SomborGraph *g, uint32_t index, double *out);

enum SomborStatus sombor_closed_form(size_t n, size_t d, uint32_t index, double *out);

enum SomborStatus sombor_build_cycle(size_t n, struct SomborGraph **out);

enum SomborStatus sombor_build_u_n_d(size_t n, size_t d, struct SomborGraph **out);

enum SomborStatus sombor_build_u_abc(size_t n,
                                     size_t a,
                                     size_t b,
                                     size_t c,
                                     struct SomborGraph **out);

/**
 * Brute-force extremum over unicyclic graphs of order `n` with diameter `d`
 * (or [`SOMBOR_ANY_DIAMETER`]). A non-positive `tolerance` selects the default.
 */
enum SomborStatus sombor_extremal(size_t n,
                                  int64_t d,
                                  uint32_t index,
                                  uint32_t direction,
                                  double tolerance,
                                  struct SomborExtremal **out);

void sombor_extremal_free(struct SomborExtremal *e);

enum SomborStatus sombor_extremal_value(const struct SomborExtremal *e, double *out);

enum SomborStatus sombor_extremal_count_searched(const struct SomborExtremal *e, size_t *out);

enum SomborStatus sombor_extremal_optimum_count(const struct SomborExtremal *e, size_t *out);

/**
 * Certificate of the `i`-th optimal class, in ascending certificate order.
 */
enum SomborStatus sombor_extremal_optimum_hex(const struct SomborExtremal *e,
                                              size_t i,
                                              char *buf,
                                              size_t cap,
                                              size_t *len_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SOMBOR_H */

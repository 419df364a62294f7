#ifndef ODDCOLOR_H
#define ODDCOLOR_H

/* Generated by cbindgen from oddcolor-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of an FFI call.
typedef enum OcStatus {
  OC_STATUS_OK = 0,
  OC_STATUS_NULL_POINTER = 1,
  OC_STATUS_INVALID_INPUT = 2,
  OC_STATUS_PARSE = 3,
  OC_STATUS_RESOURCE = 4,
  OC_STATUS_BUDGET = 5,
  OC_STATUS_METHOD = 6,
  OC_STATUS_INFEASIBLE = 7,
  OC_STATUS_INTERNAL = 8,
} OcStatus;

// A vertex coloring; colors are 1-based, 0 means uncolored.
typedef struct OcColoring OcColoring;

// An undirected simple graph.
typedef struct OcGraph OcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the most recent failure on this thread, as a NUL-terminated
// string.  The pointer stays valid until the next failing call here.
const char *oc_last_error_message(void);

// Builds a graph on `n` vertices from `m` edges given as `2*m` endpoints
// `(u0, v0, u1, v1, ...)`.  Loops and repeated edges are rejected.
//
// # Safety
// `endpoints` must point to `2*m` readable values (or be unused when
// `m == 0`), and `out` must be a valid writable pointer.
enum OcStatus oc_graph_from_edges(uintptr_t n,
                                  const uintptr_t *endpoints,
                                  uintptr_t m,
                                  struct OcGraph **out);

// Builds the circle graph of the n-cluster chord construction.
//
// # Safety
// `out` must be a valid writable pointer.
enum OcStatus oc_gn(uintptr_t n, struct OcGraph **out);

// # Safety
// `g` must be a live handle from this library, or null.
void oc_graph_free(struct OcGraph *g);

// # Safety
// `g` must be a live handle from this library.
uintptr_t oc_graph_vertex_count(const struct OcGraph *g);

// # Safety
// `g` must be a live handle from this library.
uintptr_t oc_graph_edge_count(const struct OcGraph *g);

// Exact proper odd chromatic number.  `max_nodes` limits the search
// (0 means the default limit); an exhausted budget reports `Budget`.
//
// # Safety
// `g` must be a live handle from this library; `out` must be writable.
enum OcStatus oc_exact_chi_o(const struct OcGraph *g, uint64_t max_nodes, uint32_t *out);

// Exact improper odd chromatic number (isolated vertices exempt).
//
// # Safety
// `g` must be a live handle from this library; `out` must be writable.
enum OcStatus oc_exact_chi_io(const struct OcGraph *g, uint64_t max_nodes, uint32_t *out);

// Improper odd coloring: every vertex with a neighbor sees some color an
// odd number of times, monochromatic edges allowed.
//
// # Safety
// `g` must be a live handle from this library; `out` must be writable.
enum OcStatus oc_improper_odd_color(const struct OcGraph *g, struct OcColoring **out);

// Proper odd coloring, built as the product of a greedy proper coloring
// and an improper odd coloring.
//
// # Safety
// `g` must be a live handle from this library; `out` must be writable.
enum OcStatus oc_proper_odd_color(const struct OcGraph *g, struct OcColoring **out);

// # Safety
// `c` must be a live handle from this library, or null.
void oc_coloring_free(struct OcColoring *c);

// Number of vertices the coloring covers.
//
// # Safety
// `c` must be a live handle from this library.
uintptr_t oc_coloring_len(const struct OcColoring *c);

// Number of distinct colors used.
//
// # Safety
// `c` must be a live handle from this library.
uint32_t oc_coloring_num_colors(const struct OcColoring *c);

// 1 when no edge is monochromatic, 0 otherwise.
//
// # Safety
// `c` must be a live handle from this library.
int32_t oc_coloring_is_proper(const struct OcColoring *c);

// Color of vertex `v`, or 0 when `v` is out of range or uncolored.
//
// # Safety
// `c` must be a live handle from this library.
uint32_t oc_coloring_get(const struct OcColoring *c, uintptr_t v);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ODDCOLOR_H */

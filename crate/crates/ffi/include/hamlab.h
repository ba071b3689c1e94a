#ifndef HAMLAB_H
#define HAMLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum HamlabStatus {
  HAMLAB_STATUS_OK = 0,
  HAMLAB_STATUS_NULL_POINTER = 1,
  HAMLAB_STATUS_INVALID_UTF8 = 2,
  HAMLAB_STATUS_GRAPH6 = 3,
  HAMLAB_STATUS_INVALID_ARGUMENT = 4,
  HAMLAB_STATUS_ORDER_TOO_LARGE = 5,
  HAMLAB_STATUS_VERTEX_OUT_OF_RANGE = 6,
  // A caller buffer is shorter than the result.
  HAMLAB_STATUS_BUFFER_TOO_SMALL = 7,
  // The operation's graph precondition does not hold.
  HAMLAB_STATUS_PRECONDITION = 8,
  HAMLAB_STATUS_PANIC = 99,
} HamlabStatus;

// Opaque graph handle.
typedef struct HamlabGraph HamlabGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the
// next call into this library on the same thread; do not free.
const char *hamlab_last_error(void);

// Library version, static storage.
const char *hamlab_version(void);

void hamlab_string_free(char *s);

// Edgeless graph on `n` vertices.
enum HamlabStatus hamlab_graph_new(size_t n, struct HamlabGraph **out_graph);

enum HamlabStatus hamlab_graph_from_graph6(const char *text, struct HamlabGraph **out_graph);

void hamlab_graph_free(struct HamlabGraph *g);

enum HamlabStatus hamlab_graph_clone(const struct HamlabGraph *g, struct HamlabGraph **out_graph);

// Number of vertices; 0 for a null handle.
size_t hamlab_graph_order(const struct HamlabGraph *g);

// Number of edges; 0 for a null handle.
size_t hamlab_graph_size(const struct HamlabGraph *g);

enum HamlabStatus hamlab_graph_add_edge(struct HamlabGraph *g, size_t u, size_t v);

enum HamlabStatus hamlab_graph_has_edge(const struct HamlabGraph *g,
                                        size_t u,
                                        size_t v,
                                        bool *out_has);

// graph6 encoding; release with `hamlab_string_free`.
enum HamlabStatus hamlab_graph_to_graph6(const struct HamlabGraph *g, char **out_text);

// Mycielskian: vertices `0..n` are the originals, `n..2n` their shadows,
// `2n` the apex.
enum HamlabStatus hamlab_mycielski(const struct HamlabGraph *g, struct HamlabGraph **out_graph);

// `M_k`, with `M_2 = K_2`.
enum HamlabStatus hamlab_iterated_mycielski(size_t k, struct HamlabGraph **out_graph);

enum HamlabStatus hamlab_complement(const struct HamlabGraph *g, struct HamlabGraph **out_graph);

enum HamlabStatus hamlab_power(const struct HamlabGraph *g,
                               size_t k,
                               struct HamlabGraph **out_graph);

// Degree-sum closure.
enum HamlabStatus hamlab_closure(const struct HamlabGraph *g, struct HamlabGraph **out_graph);

// Writes a Hamiltonian cycle (n vertices, closing edge implied) into `buf`
// when one exists. `out_found` is false for graphs of order below 3.
enum HamlabStatus hamlab_hamiltonian_cycle(const struct HamlabGraph *g,
                                           size_t *buf,
                                           size_t cap,
                                           bool *out_found);

// Hamiltonian path from `u` to `v`, written into `buf` when found.
enum HamlabStatus hamlab_hamiltonian_path(const struct HamlabGraph *g,
                                          size_t u,
                                          size_t v,
                                          size_t *buf,
                                          size_t cap,
                                          bool *out_found);

// On false, `out_bad_u`/`out_bad_v` (either may be null) receive the first
// pair with no Hamiltonian path, or `SIZE_MAX` for graphs below order 2.
enum HamlabStatus hamlab_is_hamiltonian_connected(const struct HamlabGraph *g,
                                                  bool *out_connected,
                                                  size_t *out_bad_u,
                                                  size_t *out_bad_v);

// Exact chromatic number; an optimal coloring goes to `colors` if non-null.
enum HamlabStatus hamlab_chromatic_number(const struct HamlabGraph *g,
                                          size_t *out_k,
                                          size_t *colors,
                                          size_t cap);

// Vertex- and edge-criticality: every deletion lowers the chromatic number.
enum HamlabStatus hamlab_is_critical(const struct HamlabGraph *g,
                                     bool *out_critical,
                                     size_t *out_chi);

// On true, `perm` (if non-null) receives an isomorphism onto the complement.
enum HamlabStatus hamlab_is_self_complementary(const struct HamlabGraph *g,
                                               bool *out_sc,
                                               size_t *perm,
                                               size_t cap);

// All-pairs Hamiltonian paths of the Mycielskian of a Hamiltonian-connected
// graph, as JSON. Release with `hamlab_string_free`.
enum HamlabStatus hamlab_mycielski_hc_certificate_json(const struct HamlabGraph *g,
                                                       char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HAMLAB_H */

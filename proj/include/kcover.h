/* C interface to the kcover library.
 *
 * Objects are opaque handles released with their matching *_free call.
 * Every fallible call returns a kc_status; on failure kc_last_error() holds a
 * message for the calling thread. Strings returned through char** are
 * heap-allocated and released with kc_string_free. JSON outputs are optional:
 * pass NULL to skip them. */
#ifndef KCOVER_H
#define KCOVER_H

#include <stddef.h>
#include <stdint.h>

#if defined(KC_BUILDING)
#define KC_API __attribute__((visibility("default")))
#else
#define KC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kc_status {
  KC_OK = 0,
  KC_ERR_INVALID_ARGUMENT = 1,
  KC_ERR_INVALID_EDGE = 2,
  KC_ERR_PARSE = 3,
  KC_ERR_UNSUPPORTED_SIZE = 4,
  KC_ERR_NO_SUCH_GRAPH = 5,
  KC_ERR_DOMAIN = 6,
  KC_ERR_SPEC = 7,
  KC_ERR_PRECONDITION = 8,
  KC_ERR_THEOREM_VIOLATION = 9,
  KC_ERR_CAP_EXCEEDED = 10,
  KC_ERR_INTERNAL = 100
} kc_status;

typedef enum kc_format { KC_FORMAT_AUTO = 0, KC_FORMAT_GRAPH6 = 1, KC_FORMAT_EDGE_LIST = 2 } kc_format;
typedef enum kc_shape { KC_SHAPE_PATH = 0, KC_SHAPE_STAR = 1 } kc_shape;
typedef enum kc_policy { KC_POLICY_LEX = 0, KC_POLICY_MAX_OVERLAP = 1 } kc_policy;

typedef struct kc_graph kc_graph;
typedef struct kc_graph_list kc_graph_list;

KC_API const char* kc_version(void);
KC_API const char* kc_status_name(kc_status status);
KC_API const char* kc_last_error(void);
/* Byte offset of the last parse error, or -1. */
KC_API int64_t kc_last_error_offset(void);
KC_API void kc_string_free(char* s);

/* Graphs (at most 64 vertices). */
KC_API kc_status kc_graph_new(int n, kc_graph** out);
/* pairs holds 2*edge_count vertex labels. */
KC_API kc_status kc_graph_from_edges(int n, const int* pairs, size_t edge_count, kc_graph** out);
KC_API kc_status kc_graph_clone(const kc_graph* g, kc_graph** out);
KC_API void kc_graph_free(kc_graph* g);
KC_API int kc_graph_order(const kc_graph* g);
KC_API size_t kc_graph_size(const kc_graph* g);
KC_API int kc_graph_has_edge(const kc_graph* g, int u, int v);
KC_API kc_status kc_graph_add_edge(kc_graph* g, int u, int v);
/* Writes 2*kc_graph_size(g) labels, lexicographic edge order. */
KC_API kc_status kc_graph_edges(const kc_graph* g, int* pairs);
KC_API kc_status kc_graph_to_graph6(const kc_graph* g, char** out);
KC_API kc_status kc_graph_to_edge_list(const kc_graph* g, char** out);
KC_API kc_status kc_graph_to_dot(const kc_graph* g, char** out);
/* Isomorphism-invariant graph6 string; at most 10 vertices. */
KC_API kc_status kc_graph_canonical_form(const kc_graph* g, char** out);
KC_API int kc_graph_is_connected(const kc_graph* g);

/* Parses one edge list or any number of graph6 lines. */
KC_API kc_status kc_graph_parse(const char* text, kc_format format, kc_graph_list** out);
KC_API size_t kc_graph_list_size(const kc_graph_list* list);
/* Borrowed handle, valid until the list is freed. */
KC_API const kc_graph* kc_graph_list_at(const kc_graph_list* list, size_t index);
KC_API void kc_graph_list_free(kc_graph_list* list);

/* (k,l)-clique edge cover: every edge lies in at least l k-cliques. */
KC_API kc_status kc_cover_check(const kc_graph* g, int k, int l, int full_counts, int* holds, char** json);
/* Maximal edge sets where every edge is in at least l triangles. A non-NULL
 * shuffle_seed randomizes the peeling order; the result does not depend on it. */
KC_API kc_status kc_truss(const kc_graph* g, int l, const uint64_t* shuffle_seed, char** json);

/* Least edge count of a graph on n vertices with a (k,1)-cover and exactly
 * `components` components (1 = connected). */
KC_API kc_status kc_bound_edge(int64_t n, int64_t k, int64_t components, int64_t* out);
/* Least edge count when every vertex lies in a k-clique. */
KC_API kc_status kc_bound_vertex(int64_t n, int64_t k, int64_t* out);

/* Extremal constructions. */
KC_API kc_status kc_construct(int n, int k, kc_shape shape, kc_graph** out);
KC_API kc_status kc_extremal_spec(int n, int k, kc_shape shape, char** spec_text);
KC_API kc_status kc_build_gtree(const char* spec_text, kc_graph** out);
KC_API kc_status kc_enumerate_extremal(int n, int k, kc_graph_list** out);
KC_API kc_status kc_recognize(const kc_graph* g, int k, int* extremal, char** json);

/* Clique-peeling procedure and trace replay. */
KC_API kc_status kc_shrink(const kc_graph* g, int k, kc_policy policy, int64_t* bound, char** trace_json);
KC_API kc_status kc_verify_trace(const kc_graph* g, const char* trace_json, int* ok, char** json);

/* Contraction of an edge in no K4 of a connected (3,2)-covered graph. With
 * verify = 0 the edge is contracted without checks. A failed conclusion
 * returns KC_ERR_THEOREM_VIOLATION with the report still written. */
KC_API kc_status kc_contract(const kc_graph* g, int u, int v, int verify, kc_graph** out, char** json);
/* Repeats verified contractions until every edge lies in a K4. */
KC_API kc_status kc_reduce(const kc_graph* g, kc_graph** out, char** json);

typedef struct kc_search_spec {
  int n;
  int k;
  int l;
  int require_connected;
  int components;     /* exact component count; 0 = unconstrained */
  int vertex_variant; /* every vertex in a k-clique instead of every edge */
} kc_search_spec;

/* Exhaustive minimum (n <= 8). With collect != 0 the minimizers are listed. */
KC_API kc_status kc_search(const kc_search_spec* spec, int collect, unsigned workers, int64_t* minimum,
                           char** json);
/* Connected graphs on n <= 8 vertices up to isomorphism. */
KC_API kc_status kc_enumerate_connected(int n, kc_graph_list** out);

/* Complement of a perfect matching on 2*l_half + 4 vertices: (3, 2*l_half)-
 * covered, yet below the (2*l_half + 2, 1) bound when l_half >= 3. */
KC_API kc_status kc_counterexample(int l_half, kc_graph** graph, char** json);
KC_API kc_status kc_convex_max(int m, int count, int total, int64_t* value, char** json);

typedef void (*kc_criterion_cb)(int id, const char* title, int passed, const char* detail, double seconds,
                                void* user);
/* Runs the acceptance criteria; `only` may be NULL to run all of them. */
KC_API kc_status kc_run_acceptance(uint64_t seed, unsigned workers, const int* only, size_t only_count,
                                 kc_criterion_cb callback, void* user, int* failed);

#ifdef __cplusplus
}
#endif

#endif

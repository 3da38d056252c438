#ifndef THETAWB_H
#define THETAWB_H

/* C interface to the theta-free non-bipartite extremal graph toolkit.
 *
 * Conventions:
 *   - Functions that can fail return twb_status; results come back through
 *     out-parameters, which are written only on TWB_OK.
 *   - twb_last_error() describes the most recent failure on the calling
 *     thread; the pointer stays valid until the thread's next call into the
 *     library.
 *   - Strings returned through char** out-parameters are heap-allocated and
 *     must be released with twb_string_free().
 *   - Graph handles are opaque; release them with twb_graph_free().
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twb_status {
  TWB_OK = 0,
  TWB_ERR_INVALID_ARGUMENT = 1,
  TWB_ERR_TOO_LARGE = 2,
  TWB_ERR_PARSE = 3,
  TWB_ERR_UNSUPPORTED = 4,
  TWB_ERR_INTERNAL = 5
} twb_status;

typedef struct twb_graph twb_graph;

const char* twb_last_error(void);
void twb_string_free(char* s);
void twb_graph_free(twb_graph* g);

/* edges: 2*edge_count vertex indices (u0,v0,u1,v1,...). */
twb_status twb_graph_build(int n, const int* edges, size_t edge_count, twb_graph** out);
twb_status twb_graph_from_graph6(const char* text, twb_graph** out);
twb_status twb_graph_to_graph6(const twb_graph* g, char** out);

int twb_graph_order(const twb_graph* g);
long twb_graph_edge_count(const twb_graph* g);
/* 1 or 0; 0 for out-of-range vertices. */
int twb_graph_has_edge(const twb_graph* g, int u, int v);
int twb_graph_is_bipartite(const twb_graph* g);
/* Length of a shortest odd cycle, or 0 when the graph is bipartite. */
int twb_graph_odd_girth(const twb_graph* g);

twb_status twb_graph_canonical(const twb_graph* g, twb_graph** out);
/* graph6 of the canonical labeling; equal strings iff isomorphic graphs. */
twb_status twb_canonical_form(const twb_graph* g, char** out);
/* 1 or 0 via *out. */
twb_status twb_is_isomorphic(const twb_graph* a, const twb_graph* b, int* out);

/* lengths: the theta pattern's path lengths, at least two entries, at most
 * one of them equal to 1.  *out receives 1 when the pattern occurs in g as a
 * subgraph, else 0. */
twb_status twb_contains_theta(const twb_graph* g, const int* lengths, size_t len_count, int* out);

/* Complete multipartite Turan graph on n vertices with r parts. */
twb_status twb_construct_turan(int n, int r, twb_graph** out);

/* Balanced constructions by name, on n vertices:
 *   "subdivided-bipartite"  complete bipartite with one edge subdivided
 *   "apex-triangle"         complete bipartite plus an apex joined to one
 *                           vertex on each side
 *   "pendant-triangle"      complete bipartite with a pendant triangle
 *   "two-apex-family"       blow-up family member (single pendant-side edge)
 *   "triangle-family"       complete bipartite plus a dominating triangle
 *   "cycle"                 the n-cycle
 *   "complete"              the complete graph
 */
twb_status twb_construct(const char* name, int n, twb_graph** out);

/* Side-size forms of the bipartite-based constructions:
 * "complete-bipartite", "subdivided-bipartite", "apex-triangle",
 * "pendant-triangle". */
twb_status twb_construct_sides(const char* name, int a, int b, twb_graph** out);

/* Certified rational bracket lo <= rho(g) <= hi, rendered as exact fraction
 * strings. */
twb_status twb_rho_bracket(const twb_graph* g, double tol, char** lo, char** hi);
/* *out: -1, 0, +1 as rho(a) <, ==, > rho(b); exact. */
twb_status twb_compare_rho(const twb_graph* a, const twb_graph* b, int* out);

/* Exhaustive extremal search over isomorphism classes of order n avoiding
 * the theta pattern as a subgraph.  objective: "edges" or "rho".  Returns a
 * JSON document (schema thetawb-search/1). */
twb_status twb_search_run(int n, const int* lengths, size_t len_count, int nonbipartite,
                          const char* objective, int jobs, char** report_json);

/* Newline-separated list of registered claim ids. */
twb_status twb_claim_list(char** out);

/* Run the named claims ("all" or a comma-separated id list) and render one
 * combined report.  n_min/n_max/trials: -1 keeps each claim's default.
 * format: "json" or "csv".  *passed receives 1 when every must-hold claim
 * passed. */
twb_status twb_verify(const char* ids, int n_min, int n_max, long trials, uint64_t seed,
                      int jobs, const char* format, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* THETAWB_H */

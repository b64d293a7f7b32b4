/* C interface to the tropidom library.
 *
 * Every fallible call returns a tropidom_status; on failure the message is
 * available from tropidom_last_error() until the next call on the same
 * thread. Handles are opaque and owned by the caller, who releases them
 * with the matching *_free function. Strings returned through char** are
 * released with tropidom_string_free. Vertices are 1-based throughout.
 */
#ifndef TROPIDOM_H
#define TROPIDOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(TROPIDOM_BUILDING)
#define TROPIDOM_API __attribute__((visibility("default")))
#else
#define TROPIDOM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tropidom_status {
    TROPIDOM_OK = 0,
    TROPIDOM_E_INVALID_ARGUMENT,
    TROPIDOM_E_PARSE,
    TROPIDOM_E_SELF_LOOP,
    TROPIDOM_E_DUPLICATE_EDGE,
    TROPIDOM_E_COLOUR_GAP,
    TROPIDOM_E_OUT_OF_RANGE,
    TROPIDOM_E_BUDGET_EXCEEDED,
    TROPIDOM_E_NOT_DOMINATING,
    TROPIDOM_E_NOT_A_PATH,
    TROPIDOM_E_REPRESENTATION_MISMATCH,
    TROPIDOM_E_TOO_MANY_COLOURS,
    TROPIDOM_E_NO_REPRESENTATION,
    TROPIDOM_E_MALFORMED_FORMULA,
    TROPIDOM_E_NOT_SUBCUBIC,
    TROPIDOM_E_HAS_ISOLATED_VERTEX,
    TROPIDOM_E_EMPTY_GRAPH,
    TROPIDOM_E_NOT_TROPICAL_DOMINATING,
    TROPIDOM_E_WRONG_ARTIFACT,
    TROPIDOM_E_BAD_PARAMETERS,
    TROPIDOM_E_BAD_EPSILON,
    TROPIDOM_E_IO,
    TROPIDOM_E_INTERNAL
} tropidom_status;

typedef enum tropidom_algorithm {
    TROPIDOM_ALGO_EXACT = 0,     /* minimum tropical dominating set */
    TROPIDOM_ALGO_EXACT_RAINBOW, /* rainbow dominating set existence */
    TROPIDOM_ALGO_GREEDY,        /* greedy set cover, H(Δ+2) guarantee */
    TROPIDOM_ALGO_PATH53,        /* paths only, 5/3 guarantee */
    TROPIDOM_ALGO_INTERVAL,      /* needs an interval representation */
    TROPIDOM_ALGO_EXACT_GAMMA    /* minimum dominating set, colours ignored */
} tropidom_algorithm;

typedef struct tropidom_graph tropidom_graph;
typedef struct tropidom_result tropidom_result;

typedef struct tropidom_graph_info {
    int n;
    size_t m;
    int c;
    int min_degree;
    int max_degree;
    int connected;
    int has_intervals;
    int is_reduction; /* produced by gen_sat / gen_vc */
} tropidom_graph_info;

typedef struct tropidom_result_info {
    int algorithm;
    int value;          /* set size; for EXACT_RAINBOW 1 when a set exists, else 0 */
    int has_witness;
    size_t witness_size;
    int lower_bound;    /* approximations only, else equals value */
    double ratio_bound; /* approximations only, else 1 */
    uint64_t explored;  /* search nodes or table transitions */
} tropidom_result_info;

typedef struct tropidom_experiment_options {
    uint64_t trials;
    uint64_t seed;
    uint64_t budget; /* 0: TROPIDOM_BUDGET or the built-in default */
    unsigned jobs;   /* 0 behaves as 1 */
    int count_rainbow;
    int timing;
} tropidom_experiment_options;

typedef struct tropidom_conjecture_options {
    int max_n;
    int max_c;
    uint64_t random_samples;
    int random_max_n;
    double random_p;
    uint64_t seed;
    uint64_t budget;
} tropidom_conjecture_options;

TROPIDOM_API const char* tropidom_version(void);
TROPIDOM_API const char* tropidom_status_name(int status);
TROPIDOM_API const char* tropidom_last_error(void);
TROPIDOM_API void tropidom_string_free(char* s);

/* Graphs. `edges` holds m pairs (u, v) flattened; `colours` holds n values. */
TROPIDOM_API int tropidom_graph_create(int n, const int* edges, size_t m, const int* colours, tropidom_graph** out);
TROPIDOM_API int tropidom_graph_parse(const char* text, tropidom_graph** out);
TROPIDOM_API int tropidom_graph_load(const char* path, tropidom_graph** out);
TROPIDOM_API int tropidom_graph_save(const tropidom_graph* g, const char* path);
TROPIDOM_API int tropidom_graph_to_text(const tropidom_graph* g, char** out);
TROPIDOM_API int tropidom_graph_info_get(const tropidom_graph* g, tropidom_graph_info* out);
/* Writes min(n, cap) colours; vertex v's colour at index v - 1. */
TROPIDOM_API int tropidom_graph_colours(const tropidom_graph* g, int* out, size_t cap);
TROPIDOM_API void tropidom_graph_free(tropidom_graph* g);

/* Predicates on a vertex set; each output pointer may be NULL. */
TROPIDOM_API int tropidom_check_set(const tropidom_graph* g, const int* vertices, size_t k, int* dominating,
                                    int* tropical, int* rainbow);

/* Solvers. budget 0 selects TROPIDOM_BUDGET or the built-in default. */
TROPIDOM_API int tropidom_solve(const tropidom_graph* g, int algorithm, uint64_t budget, tropidom_result** out);
TROPIDOM_API int tropidom_result_info_get(const tropidom_result* r, tropidom_result_info* out);
/* Writes min(witness_size, cap) ascending vertex ids. */
TROPIDOM_API int tropidom_result_witness(const tropidom_result* r, int* out, size_t cap);
TROPIDOM_API void tropidom_result_free(tropidom_result* r);

/* Generators. */
TROPIDOM_API int tropidom_gen_gnpc(int n, double p, int c, uint64_t seed, tropidom_graph** out, int* colour_resamples);
TROPIDOM_API int tropidom_gen_extremal_gamma(int gamma, int c, tropidom_graph** out);
TROPIDOM_API int tropidom_gen_extremal_edges(int n, int k, int c, tropidom_graph** out);
TROPIDOM_API int tropidom_gen_sat(const char* dimacs_cnf, tropidom_graph** out);
TROPIDOM_API int tropidom_gen_vc(const char* dimacs_graph, tropidom_graph** out);
TROPIDOM_API int tropidom_gen_pad(const tropidom_graph* path, double epsilon, tropidom_graph** out);
/* Vertex of a named position in a reduction path (e.g. "F", "V0.2"). */
TROPIDOM_API int tropidom_graph_anchor(const tropidom_graph* g, const char* name, int* vertex);
/* Vertex cover recovered from a tropical dominating set of a gen_vc path. */
TROPIDOM_API int tropidom_extract_vc(const tropidom_graph* g, const int* sigma, size_t k, int* cover, size_t cap,
                                     size_t* cover_size);

/* Closed forms. */
TROPIDOM_API int tropidom_expected_rainbow_count(int n, double p, int c, double* out);
TROPIDOM_API int tropidom_threshold_colours(int n, double p, int* out);
TROPIDOM_API int tropidom_concentration_window(int n, double p, int* lower, int* upper);

/* Reports as JSON text; csv may be NULL when not wanted. `kind` is
 * "threshold", "expectation" or "concentration" (c is ignored for the last). */
TROPIDOM_API int tropidom_experiment(const char* kind, int n, double p, int c, const tropidom_experiment_options* opts,
                                     char** json, char** csv);
/* Computes γ and γ^t exactly, then evaluates every bound. */
TROPIDOM_API int tropidom_audit(const tropidom_graph* g, uint64_t budget, char** json, int* violations);
TROPIDOM_API int tropidom_conjecture_search(const tropidom_conjecture_options* opts, char** json,
                                            uint64_t* unexplained);

#ifdef __cplusplus
}
#endif

#endif

/* diograph - maximal Diophantine graphs, closed-form invariants, necessary
 * and sufficient labelability conditions, and exact labeling search.
 *
 * C API of the shared library. All objects are opaque handles; every
 * fallible call returns a dio_status and writes results through out
 * parameters. Strings returned through char** are heap-allocated and must be
 * released with dio_string_free. On any non-OK status a human-readable
 * message is available from dio_last_error (thread-local).
 */
#ifndef DIOGRAPH_H
#define DIOGRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dio_context dio_context; /* sieve table + caps */
typedef struct dio_graph dio_graph;     /* immutable simple graph, vertices 1..n */

typedef enum dio_status {
    DIO_OK = 0,
    DIO_ERR_ARGUMENT = 1,
    DIO_ERR_RANGE = 2,
    DIO_ERR_RESOURCE = 3,
    DIO_ERR_PARSE = 4,
    DIO_ERR_INTERNAL = 5
} dio_status;

typedef enum dio_label_verdict {
    DIO_LABELED = 0,
    DIO_NONE = 1,
    DIO_UNKNOWN = 2
} dio_label_verdict;

typedef enum dio_overall {
    DIO_POSSIBLY_DIOPHANTINE = 0,
    DIO_NOT_DIOPHANTINE = 1,
    DIO_DIOPHANTINE = 2
} dio_overall;

/* Thread-local message for the most recent failure in this thread. */
const char* dio_last_error(void);

void dio_string_free(char* s);

/* sieve_limit = 0 selects the default of 10^6. Returns NULL on failure
 * (see dio_last_error). Contexts are immutable and safe to share across
 * threads. */
dio_context* dio_context_new(uint64_t sieve_limit);
void dio_context_free(dio_context* ctx);
uint64_t dio_context_sieve_limit(const dio_context* ctx);

/* --- graphs ------------------------------------------------------------ */

/* format: "edges", "json", "graph6" ("dot" is output-only). */
dio_status dio_graph_parse(const char* text, const char* format, dio_graph** out);
dio_status dio_graph_serialize(const dio_graph* g, const char* format, char** out);
/* Pad with isolated vertices up to order n (n >= current order). */
dio_status dio_graph_with_order(const dio_graph* g, uint32_t n, dio_graph** out);
uint32_t dio_graph_order(const dio_graph* g);
uint64_t dio_graph_edge_count(const dio_graph* g);
void dio_graph_free(dio_graph* g);

/* Maximal Diophantine graph D_n (identity labels, edge iff gcd | n). */
dio_status dio_build_dn(dio_context* ctx, uint64_t n, dio_graph** out);

/* --- D_n invariants ----------------------------------------------------- */

/* JSON profile {"n":...,"edge_count":...,...}. audit != 0 forces the
 * exact-solver cross-checks regardless of order. */
dio_status dio_profile_json(dio_context* ctx, uint64_t n, int audit, char** out);

/* Bounds table for n = from..to; CSV when csv != 0, aligned text otherwise. */
dio_status dio_table(dio_context* ctx, uint64_t from, uint64_t to, int csv, int audit,
                     char** out);

/* --- conditions --------------------------------------------------------- */

/* Checks C1..C6 and the sufficiency bound against D_n for n = order of g.
 * budget limits exact-solver node expansions (0 = default); time_limit is a
 * secondary wall-clock guard in seconds (0 = off). Any output pointer may be
 * NULL. has_unknown reports budget-limited verdicts. */
dio_status dio_check_conditions(dio_context* ctx, const dio_graph* g, uint64_t budget,
                                double time_limit, int early_exit, char** json_out,
                                int* overall_out, int* has_unknown_out);

/* --- labeling ----------------------------------------------------------- */

/* Exact search for a Diophantine labeling of g (universe 1..order).
 * budget = 0 selects the default of 10^6 node expansions; time_limit is a
 * secondary wall-clock guard in seconds (0 = off). */
dio_status dio_find_labeling(dio_context* ctx, const dio_graph* g, uint64_t budget,
                             double time_limit, char** json_out, int* verdict_out);

/* labels_json: [[vertex,label],...]. valid_out: 1 if the labeling is a
 * Diophantine labeling of g, 0 otherwise. */
dio_status dio_verify_labeling(dio_context* ctx, const dio_graph* g,
                               const char* labels_json, int* valid_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DIOGRAPH_H */

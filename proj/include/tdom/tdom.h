/*
 * tdom: exact domination / total domination numbers, bounds and theorem
 * verification for small simple graphs (n <= 64).
 *
 * Plain C interface over the C++ core. Every fallible call returns a
 * tdom_status; on failure tdom_last_error() holds a message for the calling
 * thread until its next failing call. Handles are opaque and owned by the
 * caller, released with the matching *_free function.
 */
#ifndef TDOM_TDOM_H_
#define TDOM_TDOM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TDOM_BUILDING_LIBRARY)
#    define TDOM_API __declspec(dllexport)
#  else
#    define TDOM_API __declspec(dllimport)
#  endif
#else
#  define TDOM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tdom_status {
  TDOM_OK = 0,
  TDOM_INVALID_ARGUMENT = 1,
  TDOM_OUT_OF_RANGE = 2,
  TDOM_REJECTED_EDGE = 3,
  TDOM_INVALID_FAMILY = 4,
  TDOM_PARSE_ERROR = 5,
  TDOM_DOMAIN_TOO_LARGE = 6,
  TDOM_RESOURCE_EXHAUSTED = 7,
  /* gamma_t of a graph with an isolated vertex */
  TDOM_UNDEFINED = 8,
  TDOM_NOT_A_TREE = 9,
  TDOM_OUT_OF_DOMAIN = 10,
  TDOM_IO_ERROR = 11,
  /* --paranoid cross-check disagreement */
  TDOM_SOLVER_MISMATCH = 12,
  TDOM_INTERNAL_ERROR = 13
} tdom_status;

typedef struct tdom_graph tdom_graph;
/* Owned output buffer (JSON, CSV, edge list or text). */
typedef struct tdom_text tdom_text;

typedef enum tdom_strategy {
  TDOM_STRATEGY_BRANCH_AND_BOUND = 0,
  TDOM_STRATEGY_EXHAUSTIVE = 1
} tdom_strategy;

/* Zero-initialized means: branch-and-bound, no limits, pruning on. */
typedef struct tdom_solver_config {
  int strategy;             /* tdom_strategy */
  uint64_t node_limit;      /* 0 = unlimited */
  uint64_t time_limit_ms;   /* 0 = unlimited */
  int disable_pruning;
} tdom_solver_config;

typedef struct tdom_result {
  uint32_t value;
  uint64_t witness; /* bit v set <=> vertex v in the witness */
  uint64_t subsets_examined;
  uint64_t branch_nodes;
  uint64_t elapsed_ns;
} tdom_result;

typedef enum tdom_circular_case {
  TDOM_CIRCULAR_COMPLETE = 0,
  TDOM_CIRCULAR_CYCLE = 1,
  TDOM_CIRCULAR_TWO = 2,
  TDOM_CIRCULAR_THREE = 3,
  TDOM_CIRCULAR_UNKNOWN = 4
} tdom_circular_case;

typedef struct tdom_circular {
  int which;        /* tdom_circular_case */
  uint32_t value;   /* 0 when unknown */
  int has_witness;
  uint64_t witness;
} tdom_circular;

/* Output flags for the report functions. */
enum {
  TDOM_FORMAT_TEXT = 1u << 0,  /* plain text instead of JSON */
  TDOM_WITH_TIMING = 1u << 1,  /* include elapsed_ms fields */
  TDOM_CROSS_CHECK = 1u << 2,  /* compute: re-derive values exhaustively */
  TDOM_NO_EXACT = 1u << 3      /* bounds: skip the exact solve */
};

typedef enum tdom_scale { TDOM_SCALE_QUICK = 0, TDOM_SCALE_FULL = 1 } tdom_scale;

TDOM_API const char* tdom_version(void);
TDOM_API const char* tdom_status_name(tdom_status status);
TDOM_API const char* tdom_last_error(void);

/* ---- graphs ---- */

/* endpoints holds 2 * edge_count vertex indices. */
TDOM_API tdom_status tdom_graph_create(uint32_t n, const uint32_t* endpoints, size_t edge_count, tdom_graph** out);
/* Edge-list text: "n m" header, then m lines "u v"; '#' comments. */
TDOM_API tdom_status tdom_graph_parse(const char* text, size_t length, tdom_graph** out);
TDOM_API tdom_status tdom_graph_load(const char* path, tdom_graph** out);
/* Family string, e.g. "circular:n=10,d=3". */
TDOM_API tdom_status tdom_graph_from_family(const char* spec, tdom_graph** out);
TDOM_API void tdom_graph_free(tdom_graph* graph);

TDOM_API uint32_t tdom_graph_order(const tdom_graph* graph);
TDOM_API size_t tdom_graph_edge_count(const tdom_graph* graph);
TDOM_API tdom_status tdom_graph_neighbors(const tdom_graph* graph, uint32_t v, uint64_t* out);
TDOM_API tdom_status tdom_graph_to_edge_list(const tdom_graph* graph, tdom_text** out);

/* ---- domination ---- */

TDOM_API tdom_status tdom_is_dominating(const tdom_graph* graph, uint64_t set, int* out);
TDOM_API tdom_status tdom_is_total_dominating(const tdom_graph* graph, uint64_t set, int* out);
/* config may be NULL. */
TDOM_API tdom_status tdom_gamma(const tdom_graph* graph, const tdom_solver_config* config, tdom_result* out);
/* TDOM_UNDEFINED when the graph has an isolated vertex. */
TDOM_API tdom_status tdom_gamma_t(const tdom_graph* graph, const tdom_solver_config* config, tdom_result* out);
TDOM_API tdom_status tdom_greedy_total_dominating(const tdom_graph* graph, uint64_t* out);

/* ---- closed forms ---- */

TDOM_API tdom_status tdom_path_cycle_formula(int is_cycle, uint32_t n, uint32_t* out);
TDOM_API tdom_status tdom_circular_gamma_t(uint32_t n, uint32_t d, tdom_circular* out);

/* ---- reports ---- */

TDOM_API tdom_status tdom_compute_report(const tdom_graph* graph, const tdom_solver_config* config, unsigned flags,
                                         tdom_text** out);
TDOM_API tdom_status tdom_bounds_report(const tdom_graph* graph, const tdom_solver_config* config, unsigned flags,
                                        tdom_text** out);
/* theorem: a theorem id such as "Thm41_Circular2", or "all". all_passed is
 * set to 1 iff every report has an empty counterexample list. */
TDOM_API tdom_status tdom_verify_report(const char* theorem, int scale, unsigned jobs, unsigned flags,
                                        tdom_text** out, int* all_passed);
/* range_spec such as "circular:n=6..14,d=3"; columns is a comma list or NULL
 * for every column. Output is CSV with a header row. */
TDOM_API tdom_status tdom_sweep_csv(const char* range_spec, const char* columns, const tdom_solver_config* config,
                                    unsigned jobs, tdom_text** out);

TDOM_API const char* tdom_text_data(const tdom_text* text);
TDOM_API size_t tdom_text_size(const tdom_text* text);
TDOM_API void tdom_text_free(tdom_text* text);

#ifdef __cplusplus
}
#endif

#endif /* TDOM_TDOM_H_ */

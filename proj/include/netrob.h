#ifndef NETROB_H
#define NETROB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Stable C surface over the robustness toolkit. All functions return a
 * status code; on failure nr_last_error() describes what went wrong for the
 * calling thread. Strings handed out through char** out parameters are
 * heap-allocated and must be released with nr_string_free(). */

typedef enum {
  NR_OK = 0,
  NR_ERROR_USAGE = 1,    /* bad arguments, unknown keys, invalid operations */
  NR_ERROR_PARSE = 2,    /* malformed input files or documents */
  NR_ERROR_UNDEFINED = 3 /* a requested value is undefined under strict mode */,
  NR_ERROR_INTERNAL = 4
} nr_status;

typedef struct nr_topology nr_topology;

const char* nr_version(void);
const char* nr_last_error(void);
void nr_string_free(char* s);

/* formats: "edgelist", "weighted_edgelist", "as_rel". The handle remembers
 * where its data came from so reports can embed input hashes. */
nr_status nr_topology_read(const char* path, const char* format, nr_topology** out);
nr_status nr_topology_parse(const char* text, const char* format, nr_topology** out);

/* model spec, e.g. "ba:v=2000,m=2", "er:v=60,p=0.1", "ws:v=40,k=4,beta=0.2",
 * "complete:v=5", "path:v=4", "cycle:v=6", "star:v=5", "grid:rows=3,cols=4",
 * "bipartite:a=3,b=4", "two_cliques:a=8,b=8", "tree:v=50". */
nr_status nr_topology_generate(const char* spec, uint64_t seed, nr_topology** out);

/* attachment files: coords "node,lat,lon" (geographic nonzero means
 * great-circle distances), labels "node,label"; every node must be covered */
nr_status nr_topology_attach_coords(nr_topology* t, const char* path, int geographic);
nr_status nr_topology_attach_labels(nr_topology* t, const char* path);

/* any out pointer may be NULL */
nr_status nr_topology_info(const nr_topology* t, uint32_t* nodes, uint32_t* edges,
                           int* directed, int* weighted, int* geo, int* labeled);

nr_status nr_topology_write(const nr_topology* t, const char* format, char** out_text);
void nr_topology_free(nr_topology* t);

/* keys: comma-separated metric keys, NULL or "" for every implemented metric.
 * Returns the versioned report JSON. Under strict nonzero, any undefined
 * metric value fails with NR_ERROR_UNDEFINED instead. */
nr_status nr_analyze(const nr_topology* t, const char* keys, uint64_t seed, int strict,
                     char** out_json);

/* scenario: key = value text (kind, metric, fraction, tracked, ...). Returns
 * a report JSON whose traces hold the executed challenge. Later keys override
 * earlier ones, so callers can append overrides such as "seed = 7". */
nr_status nr_attack(const nr_topology* t, const char* scenario, char** out_json);

/* combined document: metrics plus an optional scenario trace */
nr_status nr_report(const nr_topology* t, const char* keys, const char* scenario,
                    uint64_t seed, int strict, char** out_json);

/* method: "spectral" or "girvan_newman". Returns JSON with the assignment,
 * member lists, and modularity. */
nr_status nr_communities(const nr_topology* t, const char* method, uint64_t seed,
                         char** out_json);

/* full metric catalog as JSON: key, name, family, status, scope, mode,
 * codomain for every entry, including oracle-only and out-of-scope rows */
nr_status nr_list_metrics(char** out_json);

/* flat CSV table of the per-metric values in a report JSON */
nr_status nr_report_csv(const char* report_json, char** out_csv);

/* degradation curves of the first trace in a report JSON, returned as a JSON
 * object mapping tracked metric keys to CSV text (fraction_removed,value) */
nr_status nr_trace_csvs(const char* report_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif

/* pmdcert: positive matching decompositions with exact certificates.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the shared library.  Hypergraphs are opaque handles; all
 * structured results are returned as JSON (or plain-text) strings owned by
 * the library and released with pmdcert_string_free.  Every function
 * returns PMDCERT_OK or an error code; pmdcert_last_error() holds a
 * thread-local message for the most recent failure.
 */

#ifndef PMDCERT_PMDCERT_H
#define PMDCERT_PMDCERT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pmdcert_status {
    PMDCERT_OK = 0,
    PMDCERT_ERR_INVALID_ARGUMENT = 1,
    PMDCERT_ERR_PARSE = 2,
    PMDCERT_ERR_VERTEX_OUT_OF_RANGE = 3,
    PMDCERT_ERR_EMPTY_EDGE = 4,
    PMDCERT_ERR_CLUTTER_VIOLATION = 5,
    PMDCERT_ERR_DUPLICATE_EDGE = 6,
    PMDCERT_ERR_INDEX_OUT_OF_RANGE = 7,
    PMDCERT_ERR_NOT_UNIFORM = 8,
    PMDCERT_ERR_NOT_A_TREE = 9,
    PMDCERT_ERR_NO_EDGES = 10,
    PMDCERT_ERR_PIVOT_ISOLATED = 11,
    PMDCERT_ERR_T_OUT_OF_RANGE = 12,
    PMDCERT_ERR_N_TOO_SMALL = 13,
    PMDCERT_ERR_INVALID_D = 14,
    PMDCERT_ERR_SHAPE_MISMATCH = 15,
    PMDCERT_ERR_NOT_HOMOGENEOUS_STRICT = 16,
    PMDCERT_ERR_STAR_DECOMPOSITION = 17,
    PMDCERT_ERR_CONTRADICTION = 18,
    PMDCERT_ERR_INTERNAL = 19
} pmdcert_status;

typedef struct pmdcert_hypergraph pmdcert_hypergraph;

const char* pmdcert_status_name(pmdcert_status status);

/* Thread-local message for the most recent error in this thread; empty
 * string when the last call succeeded. */
const char* pmdcert_last_error(void);

void pmdcert_string_free(char* text);

/* --- hypergraph handles ------------------------------------------------ */

pmdcert_status pmdcert_hypergraph_parse_json(const char* json,
                                             pmdcert_hypergraph** out);
pmdcert_status pmdcert_hypergraph_parse_text(const char* text,
                                             pmdcert_hypergraph** out);
/* edge_data holds the concatenated vertex lists, edge_lens their lengths. */
pmdcert_status pmdcert_hypergraph_build(int32_t vertex_count,
                                        const int32_t* edge_data,
                                        const size_t* edge_lens,
                                        size_t edge_count,
                                        pmdcert_hypergraph** out);
void pmdcert_hypergraph_free(pmdcert_hypergraph* h);

pmdcert_status pmdcert_hypergraph_to_json(const pmdcert_hypergraph* h,
                                          char** out_json);
pmdcert_status pmdcert_hypergraph_to_text(const pmdcert_hypergraph* h,
                                          char** out_text);

int32_t pmdcert_hypergraph_vertex_count(const pmdcert_hypergraph* h);
size_t pmdcert_hypergraph_edge_count(const pmdcert_hypergraph* h);
pmdcert_status pmdcert_hypergraph_degree(const pmdcert_hypergraph* h,
                                         int32_t vertex, int32_t* out);
pmdcert_status pmdcert_hypergraph_max_degree(const pmdcert_hypergraph* h,
                                             int32_t* out);

/* --- analyses (JSON string results) ------------------------------------ */

pmdcert_status pmdcert_tree_check(const pmdcert_hypergraph* h,
                                  char** out_json);

/* edges: 0-based indices into the canonical edge list. */
pmdcert_status pmdcert_certify(const pmdcert_hypergraph* h,
                               const size_t* edges, size_t edge_count,
                               char** out_json);

/* mode: "tree" | "exact" | "greedy" | "auto".  budget_nodes caps the exact
 * search (ignored by the other modes). */
pmdcert_status pmdcert_decompose(const pmdcert_hypergraph* h,
                                 const char* mode, uint64_t budget_nodes,
                                 char** out_json);

/* mode: "full" | "residual".  jobs >= 1. */
pmdcert_status pmdcert_scan(int32_t n, const char* mode, int32_t jobs,
                            char** out_json);

pmdcert_status pmdcert_count_labels(int32_t n, char** out_json);

/* max_c <= 0 selects the full range n - k + 1. */
pmdcert_status pmdcert_obstruction(const pmdcert_hypergraph* h,
                                   int32_t max_c, char** out_json);

pmdcert_status pmdcert_status_report(const pmdcert_hypergraph* h, int32_t d,
                                     uint64_t exact_budget_nodes,
                                     int32_t obstruction_max_c,
                                     char** out_json);

/* dialect: "macaulay2" | "singular". */
pmdcert_status pmdcert_cas_script(const pmdcert_hypergraph* h, int32_t d,
                                  const char* dialect,
                                  int64_t characteristic, char** out_text);

pmdcert_status pmdcert_random_tree(int32_t k, int32_t edges, uint64_t seed,
                                   char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif

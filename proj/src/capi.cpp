// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0
//
// extern-C surface of the shared library.  Every entry point catches all
// exceptions, stores a thread-local message and maps domain errors to
// status codes; strings handed out are heap copies released by
// pmdcert_string_free.

#include "pmdcert/pmdcert.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "pmdcert/error.hpp"
#include "pmdcert/json_io.hpp"
#include "pmdcert/random_tree.hpp"

struct pmdcert_hypergraph {
    pmd::Hypergraph graph;
};

namespace {

thread_local std::string g_last_error;

pmdcert_status map_code(pmd::ErrorCode code) {
    using pmd::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_argument: return PMDCERT_ERR_INVALID_ARGUMENT;
        case ErrorCode::parse_error: return PMDCERT_ERR_PARSE;
        case ErrorCode::vertex_out_of_range:
            return PMDCERT_ERR_VERTEX_OUT_OF_RANGE;
        case ErrorCode::empty_edge: return PMDCERT_ERR_EMPTY_EDGE;
        case ErrorCode::clutter_violation:
            return PMDCERT_ERR_CLUTTER_VIOLATION;
        case ErrorCode::duplicate_edge: return PMDCERT_ERR_DUPLICATE_EDGE;
        case ErrorCode::index_out_of_range:
            return PMDCERT_ERR_INDEX_OUT_OF_RANGE;
        case ErrorCode::not_uniform: return PMDCERT_ERR_NOT_UNIFORM;
        case ErrorCode::not_a_tree: return PMDCERT_ERR_NOT_A_TREE;
        case ErrorCode::no_edges: return PMDCERT_ERR_NO_EDGES;
        case ErrorCode::pivot_isolated: return PMDCERT_ERR_PIVOT_ISOLATED;
        case ErrorCode::t_out_of_range: return PMDCERT_ERR_T_OUT_OF_RANGE;
        case ErrorCode::n_too_small: return PMDCERT_ERR_N_TOO_SMALL;
        case ErrorCode::invalid_d: return PMDCERT_ERR_INVALID_D;
        case ErrorCode::shape_mismatch: return PMDCERT_ERR_SHAPE_MISMATCH;
        case ErrorCode::not_homogeneous_strict:
            return PMDCERT_ERR_NOT_HOMOGENEOUS_STRICT;
        case ErrorCode::star_decomposition_violation:
            return PMDCERT_ERR_STAR_DECOMPOSITION;
        case ErrorCode::contradiction_detected:
            return PMDCERT_ERR_CONTRADICTION;
        case ErrorCode::internal_error: return PMDCERT_ERR_INTERNAL;
    }
    return PMDCERT_ERR_INTERNAL;
}

template <typename Fn>
pmdcert_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return PMDCERT_OK;
    } catch (const pmd::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PMDCERT_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return PMDCERT_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void require(bool condition, const char* what) {
    if (!condition) pmd::fail(pmd::ErrorCode::invalid_argument, what);
}

} // namespace

extern "C" {

const char* pmdcert_status_name(pmdcert_status status) {
    switch (status) {
        case PMDCERT_OK: return "ok";
        case PMDCERT_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case PMDCERT_ERR_PARSE: return "parse_error";
        case PMDCERT_ERR_VERTEX_OUT_OF_RANGE: return "vertex_out_of_range";
        case PMDCERT_ERR_EMPTY_EDGE: return "empty_edge";
        case PMDCERT_ERR_CLUTTER_VIOLATION: return "clutter_violation";
        case PMDCERT_ERR_DUPLICATE_EDGE: return "duplicate_edge";
        case PMDCERT_ERR_INDEX_OUT_OF_RANGE: return "index_out_of_range";
        case PMDCERT_ERR_NOT_UNIFORM: return "not_uniform";
        case PMDCERT_ERR_NOT_A_TREE: return "not_a_tree";
        case PMDCERT_ERR_NO_EDGES: return "no_edges";
        case PMDCERT_ERR_PIVOT_ISOLATED: return "pivot_isolated";
        case PMDCERT_ERR_T_OUT_OF_RANGE: return "t_out_of_range";
        case PMDCERT_ERR_N_TOO_SMALL: return "n_too_small";
        case PMDCERT_ERR_INVALID_D: return "invalid_d";
        case PMDCERT_ERR_SHAPE_MISMATCH: return "shape_mismatch";
        case PMDCERT_ERR_NOT_HOMOGENEOUS_STRICT:
            return "not_homogeneous_strict";
        case PMDCERT_ERR_STAR_DECOMPOSITION:
            return "star_decomposition_violation";
        case PMDCERT_ERR_CONTRADICTION: return "contradiction_detected";
        case PMDCERT_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* pmdcert_last_error(void) { return g_last_error.c_str(); }

void pmdcert_string_free(char* text) { std::free(text); }

pmdcert_status pmdcert_hypergraph_parse_json(const char* json,
                                             pmdcert_hypergraph** out) {
    return guarded([&] {
        require(json && out, "null argument");
        *out = new pmdcert_hypergraph{pmd::hypergraph_from_json_text(json)};
    });
}

pmdcert_status pmdcert_hypergraph_parse_text(const char* text,
                                             pmdcert_hypergraph** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new pmdcert_hypergraph{pmd::hypergraph_from_text(text)};
    });
}

pmdcert_status pmdcert_hypergraph_build(int32_t vertex_count,
                                        const int32_t* edge_data,
                                        const size_t* edge_lens,
                                        size_t edge_count,
                                        pmdcert_hypergraph** out) {
    return guarded([&] {
        require(out && (edge_count == 0 || (edge_data && edge_lens)),
                "null argument");
        std::vector<std::vector<int>> edges;
        std::size_t offset = 0;
        for (std::size_t i = 0; i < edge_count; ++i) {
            edges.emplace_back(edge_data + offset,
                               edge_data + offset + edge_lens[i]);
            offset += edge_lens[i];
        }
        *out = new pmdcert_hypergraph{
            pmd::Hypergraph::validate(vertex_count, edges)};
    });
}

void pmdcert_hypergraph_free(pmdcert_hypergraph* h) { delete h; }

pmdcert_status pmdcert_hypergraph_to_json(const pmdcert_hypergraph* h,
                                          char** out_json) {
    return guarded([&] {
        require(h && out_json, "null argument");
        *out_json = copy_string(pmd::hypergraph_to_json(h->graph).dump());
    });
}

pmdcert_status pmdcert_hypergraph_to_text(const pmdcert_hypergraph* h,
                                          char** out_text) {
    return guarded([&] {
        require(h && out_text, "null argument");
        *out_text = copy_string(pmd::hypergraph_to_text(h->graph));
    });
}

int32_t pmdcert_hypergraph_vertex_count(const pmdcert_hypergraph* h) {
    return h ? h->graph.vertex_count() : 0;
}

size_t pmdcert_hypergraph_edge_count(const pmdcert_hypergraph* h) {
    return h ? h->graph.edge_count() : 0;
}

pmdcert_status pmdcert_hypergraph_degree(const pmdcert_hypergraph* h,
                                         int32_t vertex, int32_t* out) {
    return guarded([&] {
        require(h && out, "null argument");
        *out = h->graph.degree(vertex);
    });
}

pmdcert_status pmdcert_hypergraph_max_degree(const pmdcert_hypergraph* h,
                                             int32_t* out) {
    return guarded([&] {
        require(h && out, "null argument");
        *out = h->graph.max_degree();
    });
}

pmdcert_status pmdcert_tree_check(const pmdcert_hypergraph* h,
                                  char** out_json) {
    return guarded([&] {
        require(h && out_json, "null argument");
        *out_json =
            copy_string(pmd::tree_check_to_json(pmd::check_tree(h->graph)).dump());
    });
}

pmdcert_status pmdcert_certify(const pmdcert_hypergraph* h,
                               const size_t* edges, size_t edge_count,
                               char** out_json) {
    return guarded([&] {
        require(h && out_json && (edge_count == 0 || edges), "null argument");
        std::vector<std::size_t> matching(edges, edges + edge_count);
        const auto verdict = pmd::certify_positive(h->graph, matching);
        *out_json = copy_string(pmd::verdict_to_json(verdict).dump());
    });
}

pmdcert_status pmdcert_decompose(const pmdcert_hypergraph* h,
                                 const char* mode, uint64_t budget_nodes,
                                 char** out_json) {
    return guarded([&] {
        require(h && mode && out_json, "null argument");
        const std::string m = mode;
        pmd::Json out;
        if (m == "exact") {
            out = pmd::exact_result_to_json(
                pmd::pmd_exact(h->graph, pmd::SearchBudget{budget_nodes}));
        } else {
            pmd::PmdDecomposition d;
            if (m == "tree") {
                d = pmd::pmd_tree(h->graph);
            } else if (m == "greedy") {
                d = pmd::pmd_greedy(h->graph);
            } else if (m == "auto") {
                d = pmd::check_tree(h->graph).is_tree ? pmd::pmd_tree(h->graph)
                                                      : pmd::pmd_greedy(h->graph);
            } else {
                pmd::fail(pmd::ErrorCode::invalid_argument,
                          "mode must be tree|exact|greedy|auto");
            }
            out = pmd::decomposition_to_json(d);
            out["bounds"] = pmd::bounds_to_json(pmd::pmd_bounds(h->graph));
        }
        *out_json = copy_string(out.dump());
    });
}

pmdcert_status pmdcert_scan(int32_t n, const char* mode, int32_t jobs,
                            char** out_json) {
    return guarded([&] {
        require(mode && out_json, "null argument");
        const std::string m = mode;
        bool residual = false;
        if (m == "residual")
            residual = true;
        else if (m != "full")
            pmd::fail(pmd::ErrorCode::invalid_argument,
                      "mode must be full|residual");
        const auto table =
            pmd::scan_conjecture(n, residual, jobs < 1 ? 1 : jobs);
        *out_json = copy_string(pmd::partition_table_to_json(table).dump());
    });
}

pmdcert_status pmdcert_count_labels(int32_t n, char** out_json) {
    return guarded([&] {
        require(out_json, "null argument");
        *out_json = copy_string(pmd::count_report_json(n).dump());
    });
}

pmdcert_status pmdcert_obstruction(const pmdcert_hypergraph* h,
                                   int32_t max_c, char** out_json) {
    return guarded([&] {
        require(h && out_json, "null argument");
        int limit = max_c;
        if (limit <= 0) {
            const auto k = h->graph.uniform_k();
            limit = h->graph.vertex_count() - k.value_or(2) + 1;
        }
        const auto witness = pmd::obstruction_search(h->graph, limit);
        pmd::Json out;
        out["max_c"] = limit;
        out["witness"] =
            witness ? pmd::obstruction_to_json(*witness) : pmd::Json(nullptr);
        out["value"] = witness ? witness->value : 0;
        *out_json = copy_string(out.dump());
    });
}

pmdcert_status pmdcert_status_report(const pmdcert_hypergraph* h, int32_t d,
                                     uint64_t exact_budget_nodes,
                                     int32_t obstruction_max_c,
                                     char** out_json) {
    return guarded([&] {
        require(h && out_json, "null argument");
        pmd::StatusOptions options;
        options.exact_budget_nodes = exact_budget_nodes;
        options.obstruction_max_c = obstruction_max_c;
        const auto report = pmd::status_report(h->graph, d, options);
        *out_json = copy_string(pmd::status_to_json(report).dump());
    });
}

pmdcert_status pmdcert_cas_script(const pmdcert_hypergraph* h, int32_t d,
                                  const char* dialect,
                                  int64_t characteristic, char** out_text) {
    return guarded([&] {
        require(h && dialect && out_text, "null argument");
        const std::string name = dialect;
        pmd::CasDialect cas;
        if (name == "macaulay2")
            cas = pmd::CasDialect::macaulay2;
        else if (name == "singular")
            cas = pmd::CasDialect::singular;
        else
            pmd::fail(pmd::ErrorCode::invalid_argument,
                      "dialect must be macaulay2|singular");
        *out_text = copy_string(
            pmd::emit_cas_script(h->graph, d, cas, characteristic));
    });
}

pmdcert_status pmdcert_random_tree(int32_t k, int32_t edges, uint64_t seed,
                                   char** out_json) {
    return guarded([&] {
        require(out_json, "null argument");
        const auto tree = pmd::random_tree(k, edges, seed);
        *out_json = copy_string(pmd::hypergraph_to_json(tree).dump());
    });
}

} // extern "C"

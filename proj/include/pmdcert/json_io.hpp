// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_JSON_IO_HPP
#define PMDCERT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "pmdcert/error.hpp"
#include "pmdcert/hypergraph.hpp"
#include "pmdcert/lss.hpp"
#include "pmdcert/partition_family.hpp"
#include "pmdcert/pmd_solver.hpp"
#include "pmdcert/positive_matching.hpp"

namespace pmd {

using Json = nlohmann::json;

// {"n": int, "edges": [[int,...],...]}
Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);
Hypergraph hypergraph_from_json_text(const std::string& text);

// Line-based format: optional "n <count>" directive, then one edge per
// line (space-separated vertices); '#' starts a comment.  Round-trips.
std::string hypergraph_to_text(const Hypergraph& h);
Hypergraph hypergraph_from_text(const std::string& text);

// Vertex -> "num[/den]" object, e.g. {"1": "1", "3": "-1/2"}.
Json weights_to_json(const WeightCertificate& w);
WeightCertificate weights_from_json(const Json& j, int vertex_count);

Json verdict_to_json(const PositivityVerdict& v);

// {"p":..., "parts":..., "certificates":..., "mode":...} plus extras.
Json decomposition_to_json(const PmdDecomposition& d);
Json bounds_to_json(const PmdBounds& b);
Json exact_result_to_json(const ExactResult& r);

Json tree_check_to_json(const TreeCheckResult& r);

Json partition_table_to_json(const PartitionTable& t);
Json count_report_json(int n);

Json obstruction_to_json(const ObstructionWitness& w);
Json status_to_json(const StatusReport& s);

Json error_to_json(ErrorCode code, const std::string& message);

} // namespace pmd

#endif

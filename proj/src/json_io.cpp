// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#include "pmdcert/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace pmd {

Json hypergraph_to_json(const Hypergraph& h) {
    Json edges = Json::array();
    for (const auto& e : h.edges()) edges.push_back(e);
    return Json{{"n", h.vertex_count()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        fail(ErrorCode::parse_error,
             "hypergraph JSON must be {\"n\": int, \"edges\": [[int,...],...]}");
    if (!j["n"].is_number_integer())
        fail(ErrorCode::parse_error, "\"n\" must be an integer");
    if (!j["edges"].is_array())
        fail(ErrorCode::parse_error, "\"edges\" must be an array");
    std::vector<std::vector<int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array())
            fail(ErrorCode::parse_error, "each edge must be an array of ints");
        std::vector<int> edge;
        for (const auto& v : e) {
            if (!v.is_number_integer())
                fail(ErrorCode::parse_error, "vertices must be integers");
            edge.push_back(v.get<int>());
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph::validate(j["n"].get<int>(), edges);
}

Hypergraph hypergraph_from_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        fail(ErrorCode::parse_error, "input is not valid JSON");
    return hypergraph_from_json(j);
}

std::string hypergraph_to_text(const Hypergraph& h) {
    std::ostringstream out;
    out << "# hypergraph: one edge per line\n";
    out << "n " << h.vertex_count() << "\n";
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << "\n";
    }
    return out.str();
}

Hypergraph hypergraph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> edges;
    int n = 0;
    bool n_given = false;
    int max_vertex = 0;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (first == "n") {
            if (!(fields >> n) || n < 1)
                fail(ErrorCode::parse_error, "bad 'n' directive");
            n_given = true;
            continue;
        }
        std::vector<int> edge;
        try {
            edge.push_back(std::stoi(first));
        } catch (const std::exception&) {
            fail(ErrorCode::parse_error, "bad vertex token '" + first + "'");
        }
        int v = 0;
        while (fields >> v) edge.push_back(v);
        if (!fields.eof())
            fail(ErrorCode::parse_error, "bad vertex token in line: " + line);
        for (int w : edge) max_vertex = std::max(max_vertex, w);
        edges.push_back(std::move(edge));
    }
    if (!n_given) n = max_vertex;
    if (n < 1) fail(ErrorCode::parse_error, "empty hypergraph file");
    return Hypergraph::validate(n, edges);
}

Json weights_to_json(const WeightCertificate& w) {
    Json out = Json::object();
    for (std::size_t i = 0; i < w.weights.size(); ++i)
        out[std::to_string(i + 1)] = rational_to_string(w.weights[i]);
    return out;
}

WeightCertificate weights_from_json(const Json& j, int vertex_count) {
    if (!j.is_object())
        fail(ErrorCode::parse_error, "weights must be an object");
    WeightCertificate w;
    w.weights.assign(static_cast<std::size_t>(vertex_count), Rational(0));
    for (const auto& [key, value] : j.items()) {
        int v = 0;
        try {
            v = std::stoi(key);
        } catch (const std::exception&) {
            fail(ErrorCode::parse_error, "bad vertex key '" + key + "'");
        }
        if (v < 1 || v > vertex_count)
            fail(ErrorCode::vertex_out_of_range, "weight for vertex " + key);
        w.weights[static_cast<std::size_t>(v) - 1] =
            rational_from_string(value.get<std::string>());
    }
    return w;
}

namespace {

Json rationals_to_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(rational_to_string(v));
    return out;
}

} // namespace

Json verdict_to_json(const PositivityVerdict& v) {
    Json out;
    switch (v.kind) {
        case PositivityVerdict::Kind::positive: out["verdict"] = "positive"; break;
        case PositivityVerdict::Kind::not_positive:
            out["verdict"] = "not_positive";
            break;
        case PositivityVerdict::Kind::not_a_matching:
            out["verdict"] = "not_a_matching";
            break;
    }
    out["matching"] = v.matching;
    out["rows"] = v.rows;
    if (v.certificate) out["weights"] = weights_to_json(*v.certificate);
    if (v.kind == PositivityVerdict::Kind::not_positive)
        out["farkas"] = rationals_to_json(v.farkas);
    if (v.overlap)
        out["overlap"] = Json{{"edge_a", v.overlap->edge_a},
                              {"edge_b", v.overlap->edge_b},
                              {"shared_vertex", v.overlap->shared_vertex}};
    return out;
}

Json decomposition_to_json(const PmdDecomposition& d) {
    Json parts = Json::array();
    for (const auto& p : d.parts) parts.push_back(p);
    Json certificates = Json::array();
    for (const auto& c : d.certificates) certificates.push_back(weights_to_json(c));
    return Json{{"p", d.parts.size()},
                {"parts", parts},
                {"certificates", certificates},
                {"mode", d.mode},
                {"used_lp_fallback", d.used_lp_fallback}};
}

Json bounds_to_json(const PmdBounds& b) {
    Json out{{"lower", b.lower}, {"upper", b.upper}};
    out["exact"] = b.exact ? Json(*b.exact) : Json(nullptr);
    return out;
}

Json exact_result_to_json(const ExactResult& r) {
    Json out = decomposition_to_json(r.decomposition);
    out["bounds"] = bounds_to_json(r.bounds);
    out["budget_exhausted"] = r.budget_exhausted;
    out["nodes_expanded"] = r.nodes_expanded;
    return out;
}

Json tree_check_to_json(const TreeCheckResult& r) {
    Json out{{"is_k_uniform", r.is_k_uniform},
             {"k", r.k},
             {"is_tree", r.is_tree},
             {"isolated_vertices", r.isolated}};
    if (!r.violation) {
        out["violation"] = nullptr;
        return out;
    }
    Json v;
    switch (r.violation->kind) {
        case TreeViolation::Kind::not_uniform:
            v["kind"] = "not_uniform";
            break;
        case TreeViolation::Kind::edge_overlap:
            v["kind"] = "edge_overlap";
            v["edge_a"] = r.violation->edge_a;
            v["edge_b"] = r.violation->edge_b;
            break;
        case TreeViolation::Kind::sequence_count:
            v["kind"] = "sequence_count";
            v["pair"] = Json::array({r.violation->vertex_a, r.violation->vertex_b});
            v["sequences"] = r.violation->sequences;
            break;
    }
    out["violation"] = v;
    return out;
}

Json partition_table_to_json(const PartitionTable& t) {
    Json classes = Json::array();
    Json counterexamples = Json::array();
    for (const auto& cls : t.classes) {
        Json c{{"l1", cls.label.l1},
               {"l2", cls.label.l2},
               {"edges", cls.triples},
               {"edge_indices", cls.edge_indices}};
        if (cls.verdict) {
            c["verdict"] = verdict_to_json(*cls.verdict);
            if (cls.verdict->kind != PositivityVerdict::Kind::positive)
                counterexamples.push_back(
                    Json{{"l1", cls.label.l1}, {"l2", cls.label.l2}});
        }
        classes.push_back(std::move(c));
    }
    Json out{{"n", t.n},
             {"count", t.classes.size()},
             {"formula", closed_formula(t.n)},
             {"classes", classes}};
    if (t.scanned) {
        out["mode"] = t.residual_mode ? "residual" : "full";
        out["counterexamples"] = counterexamples;
        out["pmd_upper_bound"] = t.peel_upper_bound;
        out["pmd_upper_certified"] = t.peel_certified;
    }
    return out;
}

Json count_report_json(int n) {
    const long long count = count_labels(n);
    const long long formula = closed_formula(n);
    const long long count_next = count_labels(n + 1);
    return Json{{"n", n},
                {"count", count},
                {"formula", formula},
                {"match", count == formula},
                {"increment_to_next", count_next - count},
                {"increment_formula", 3LL * n - 6},
                {"increment_match", count_next - count == 3LL * n - 6}};
}

Json obstruction_to_json(const ObstructionWitness& w) {
    return Json{{"c", w.c},
                {"apexes", w.apexes},
                {"link", w.link},
                {"value", w.value}};
}

Json status_to_json(const StatusReport& s) {
    Json out{{"n", s.n},
             {"k", s.k},
             {"d", s.d},
             {"pmd", bounds_to_json(s.pmd)},
             {"pmd_upper", s.pmd_upper},
             {"obstruction_value", s.obstruction_value},
             {"ci_known", s.ci_known},
             {"prime_known", s.prime_known},
             {"not_prime_known", s.not_prime_known},
             {"irreducible_range",
              Json{{"from", s.irreducible_from}, {"to", s.irreducible_to}}},
             {"rank_bound", s.rank_bound}};
    out["obstruction"] =
        s.obstruction ? obstruction_to_json(*s.obstruction) : Json(nullptr);
    return out;
}

Json error_to_json(ErrorCode code, const std::string& message) {
    return Json{{"error",
                 Json{{"code", error_code_name(code)}, {"message", message}}}};
}

} // namespace pmd

// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Talks to the shared library exclusively through
// the C interface; all structured results flow back as JSON strings.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "pmdcert/pmdcert.h"

namespace {

using nlohmann::json;

struct StringHolder {
    char* text = nullptr;
    ~StringHolder() { pmdcert_string_free(text); }
    std::string str() const { return text ? std::string(text) : std::string(); }
};

struct GraphHolder {
    pmdcert_hypergraph* handle = nullptr;
    ~GraphHolder() { pmdcert_hypergraph_free(handle); }
};

struct CommonOptions {
    std::string out_path;
    bool pretty = false;
};

[[noreturn]] void die(pmdcert_status status) {
    json err{{"error",
              {{"code", pmdcert_status_name(status)},
               {"message", pmdcert_last_error()}}}};
    std::cout << err.dump(2) << "\n";
    std::exit(1);
}

void check(pmdcert_status status) {
    if (status != PMDCERT_OK) die(status);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        json err{{"error",
                  {{"code", "io_error"},
                   {"message", "cannot open input file: " + path}}}};
        std::cout << err.dump(2) << "\n";
        std::exit(1);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

GraphHolder load_hypergraph(const std::string& path) {
    const std::string content = read_input(path);
    GraphHolder graph;
    // JSON first, then the line-based format.
    const auto not_space = content.find_first_not_of(" \t\r\n");
    if (not_space != std::string::npos && content[not_space] == '{') {
        check(pmdcert_hypergraph_parse_json(content.c_str(), &graph.handle));
    } else {
        check(pmdcert_hypergraph_parse_text(content.c_str(), &graph.handle));
    }
    return graph;
}

void emit(const CommonOptions& options, const std::string& payload,
          bool is_json = true) {
    std::string text = payload;
    if (is_json && options.pretty)
        text = json::parse(payload).dump(2);
    if (!is_json && !text.empty() && text.back() == '\n')
        text.pop_back();
    if (options.out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream file(options.out_path);
        file << text << "\n";
    }
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> indices;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        indices.push_back(std::stoul(token));
    }
    return indices;
}

// Resolves "1 2 3; 3 4 5" against the canonical edge list of the graph.
std::vector<std::size_t> resolve_edges(const GraphHolder& graph,
                                       const std::string& text) {
    StringHolder dump;
    check(pmdcert_hypergraph_to_json(graph.handle, &dump.text));
    const json parsed = json::parse(dump.str());
    std::vector<std::vector<int>> edges =
        parsed["edges"].get<std::vector<std::vector<int>>>();

    std::vector<std::size_t> indices;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> edge;
        std::stringstream fields(group);
        int v = 0;
        while (fields >> v) edge.push_back(v);
        if (edge.empty()) continue;
        std::sort(edge.begin(), edge.end());
        bool found = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i] == edge) {
                indices.push_back(i);
                found = true;
                break;
            }
        }
        if (!found) {
            json err{{"error",
                      {{"code", "index_out_of_range"},
                       {"message", "no such edge in the hypergraph: " + group}}}};
            std::cout << err.dump(2) << "\n";
            std::exit(1);
        }
    }
    return indices;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"positive matching decompositions with exact certificates"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    CommonOptions common;
    app.add_option("--out", common.out_path, "write the report to a file")
        ->capture_default_str();
    auto* pretty_flag =
        app.add_flag("--pretty", common.pretty, "indent JSON output");
    (void)pretty_flag;

    std::string input_path;
    std::string matching_arg, edges_arg, mode, dialect = "macaulay2";
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 1;
    int n = 0, d = 0, k = 3, edges_count = 5, max_c = 0, jobs = 1;
    long long characteristic = 0;

    auto* cmd_validate =
        app.add_subcommand("validate", "canonicalize a hypergraph file");
    cmd_validate->add_option("--input", input_path, "hypergraph file (JSON or text, '-' for stdin)")
        ->required();
    std::string output_format = "json";
    cmd_validate->add_option("--format", output_format,
                             "output format: json|text");

    auto* cmd_pmd = app.add_subcommand(
        "pmd", "positive matching decomposition with bounds");
    cmd_pmd->add_option("--input", input_path, "hypergraph file")->required();
    cmd_pmd->add_option("--mode", mode,
                        "tree|exact|greedy|auto (default auto)");
    cmd_pmd->add_option("--budget", budget, "node budget for --mode exact");

    auto* cmd_certify = app.add_subcommand(
        "certify", "decide whether a matching is positive");
    cmd_certify->add_option("--input", input_path, "hypergraph file")->required();
    cmd_certify->add_option("--matching", matching_arg,
                            "comma-separated 0-based edge indices");
    cmd_certify->add_option("--edges", edges_arg,
                            "explicit edges, e.g. \"1 2 3; 4 5 6\"");

    auto* cmd_tree =
        app.add_subcommand("tree-pmd", "Delta(H)-part decomposition of a tree");
    cmd_tree->add_option("--input", input_path, "hypergraph file")->required();

    auto* cmd_scan = app.add_subcommand(
        "scan", "label-class positivity scan of the complete 3-uniform hypergraph");
    cmd_scan->add_option("--n", n, "number of vertices")->required();
    cmd_scan->add_option("--mode", mode, "full|residual (default full)");
    cmd_scan->add_option("--jobs", jobs, "parallel certifications (full mode)");

    auto* cmd_count =
        app.add_subcommand("count", "label-pair count vs the closed formula");
    cmd_count->add_option("--n", n, "number of vertices")->required();

    auto* cmd_ideal = app.add_subcommand(
        "ideal", "emit a CAS script defining the edge ideal");
    cmd_ideal->add_option("--input", input_path, "hypergraph file")->required();
    cmd_ideal->add_option("--d", d, "number of slots")->required();
    cmd_ideal->add_option("--dialect", dialect, "macaulay2|singular");
    cmd_ideal->add_option("--char", characteristic, "field characteristic");

    auto* cmd_status = app.add_subcommand(
        "status", "primality / complete intersection implication report");
    cmd_status->add_option("--input", input_path, "hypergraph file")->required();
    cmd_status->add_option("--d", d, "number of slots")->required();
    std::uint64_t status_budget = 5'000;
    cmd_status->add_option("--budget", status_budget,
                           "exact search node budget (0 disables)");
    int status_max_c = 2;
    cmd_status->add_option("--max-c", status_max_c,
                           "apex budget for the obstruction search");

    auto* cmd_obstruct =
        app.add_subcommand("obstruct", "maximal join-hypergraph obstruction");
    cmd_obstruct->add_option("--input", input_path, "hypergraph file")->required();
    cmd_obstruct->add_option("--max-c", max_c,
                             "apex budget (default: full range n-k+1)");

    auto* cmd_gen = app.add_subcommand(
        "gen-tree", "seeded random k-uniform tree (reproducible)");
    cmd_gen->add_option("--k", k, "edge size")->required();
    cmd_gen->add_option("--edges", edges_count, "number of edges")->required();
    cmd_gen->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_validate->parsed()) {
        GraphHolder graph = load_hypergraph(input_path);
        StringHolder out;
        if (output_format == "text") {
            check(pmdcert_hypergraph_to_text(graph.handle, &out.text));
            emit(common, out.str(), false);
        } else {
            check(pmdcert_hypergraph_to_json(graph.handle, &out.text));
            emit(common, out.str());
        }
    } else if (cmd_pmd->parsed()) {
        GraphHolder graph = load_hypergraph(input_path);
        StringHolder out;
        check(pmdcert_decompose(graph.handle,
                                mode.empty() ? "auto" : mode.c_str(), budget,
                                &out.text));
        emit(common, out.str());
    } else if (cmd_certify->parsed()) {
        GraphHolder graph = load_hypergraph(input_path);
        std::vector<std::size_t> indices;
        if (!matching_arg.empty()) indices = parse_index_list(matching_arg);
        if (!edges_arg.empty()) {
            auto resolved = resolve_edges(graph, edges_arg);
            indices.insert(indices.end(), resolved.begin(), resolved.end());
        }
        StringHolder out;
        check(pmdcert_certify(graph.handle, indices.data(), indices.size(),
                              &out.text));
        emit(common, out.str());
    } else if (cmd_tree->parsed()) {
        GraphHolder graph = load_hypergraph(input_path);
        StringHolder out;
        check(pmdcert_decompose(graph.handle, "tree", budget, &out.text));
        emit(common, out.str());
    } else if (cmd_scan->parsed()) {
        StringHolder out;
        check(pmdcert_scan(n, mode.empty() ? "full" : mode.c_str(), jobs,
                           &out.text));
        emit(common, out.str());
    } else if (cmd_count->parsed()) {
        StringHolder out;
        check(pmdcert_count_labels(n, &out.text));
        emit(common, out.str());
    } else if (cmd_ideal->parsed()) {
        GraphHolder graph = load_hypergraph(input_path);
        StringHolder out;
        check(pmdcert_cas_script(graph.handle, d, dialect.c_str(),
                                 characteristic, &out.text));
        emit(common, out.str(), false);
    } else if (cmd_status->parsed()) {
        GraphHolder graph = load_hypergraph(input_path);
        StringHolder out;
        check(pmdcert_status_report(graph.handle, d, status_budget,
                                    status_max_c, &out.text));
        emit(common, out.str());
    } else if (cmd_obstruct->parsed()) {
        GraphHolder graph = load_hypergraph(input_path);
        StringHolder out;
        check(pmdcert_obstruction(graph.handle, max_c, &out.text));
        emit(common, out.str());
    } else if (cmd_gen->parsed()) {
        StringHolder out;
        check(pmdcert_random_tree(k, edges_count, seed, &out.text));
        emit(common, out.str());
    }
    return 0;
}

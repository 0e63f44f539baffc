// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#include "pmdcert/partition_family.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "pmdcert/error.hpp"

namespace pmd {

Hypergraph complete_three_uniform(int n) {
    if (n < 3) fail(ErrorCode::n_too_small, "need n >= 3, got " + std::to_string(n));
    std::vector<std::vector<int>> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) edges.push_back({a, b, c});
    return Hypergraph::validate(n, edges);
}

PartitionTable build_partition(int n) {
    if (n < 3) fail(ErrorCode::n_too_small, "need n >= 3, got " + std::to_string(n));
    const Hypergraph complete = complete_three_uniform(n);

    std::map<LabelPair, PartitionClass> classes;
    for (std::size_t idx = 0; idx < complete.edge_count(); ++idx) {
        const Edge& e = complete.edge(idx);
        const LabelPair label{e[0] + e[1], e[1] + e[2]};
        auto& cls = classes[label];
        cls.label = label;
        cls.triples.push_back(e);
        cls.edge_indices.push_back(idx);
    }

    // Each class must be a matching and the classes must tile all triples.
    std::set<Edge> covered;
    for (auto& [label, cls] : classes) {
        const MatchingCheck mc = check_matching(complete, cls.edge_indices);
        if (!mc.is_matching)
            fail(ErrorCode::internal_error,
                 "label class is not a matching at (l1,l2) = (" +
                     std::to_string(label.l1) + "," + std::to_string(label.l2) +
                     ")");
        for (const Edge& e : cls.triples) {
            if (!covered.insert(e).second)
                fail(ErrorCode::internal_error,
                     "triple " + edge_to_string(e) + " appears in two classes");
        }
    }
    if (covered.size() != complete.edge_count())
        fail(ErrorCode::internal_error, "label classes do not cover all triples");

    PartitionTable table;
    table.n = n;
    for (auto& [label, cls] : classes) table.classes.push_back(std::move(cls));
    table.peel_upper_bound = static_cast<int>(table.classes.size());
    return table;
}

long long count_labels(int n) {
    if (n < 3) fail(ErrorCode::n_too_small, "need n >= 3, got " + std::to_string(n));
    std::set<std::pair<int, int>> labels;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) labels.insert({a + b, b + c});
    return static_cast<long long>(labels.size());
}

long long closed_formula(int n) {
    const long long nn = n;
    const long long numerator = 3 * nn * nn - 15 * nn + 20;
    if (numerator % 2 != 0)
        fail(ErrorCode::internal_error, "formula is not an integer");
    return numerator / 2;
}

PartitionTable scan_conjecture(int n, bool residual_mode, int jobs) {
    PartitionTable table = build_partition(n);
    const Hypergraph complete = complete_three_uniform(n);
    table.scanned = true;
    table.residual_mode = residual_mode;

    if (residual_mode) {
        // Peel classes in (l1, l2) order; each is certified against what is
        // left at its turn.
        std::vector<std::size_t> residual(complete.edge_count());
        for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = i;
        for (auto& cls : table.classes) {
            cls.verdict =
                certify_positive_in(complete, residual, cls.edge_indices);
            std::vector<std::size_t> next;
            std::set_difference(residual.begin(), residual.end(),
                                cls.edge_indices.begin(),
                                cls.edge_indices.end(),
                                std::back_inserter(next));
            residual = std::move(next);
        }
    } else if (jobs <= 1) {
        for (auto& cls : table.classes)
            cls.verdict = certify_positive(complete, cls.edge_indices);
    } else {
        // Classes are independent in full mode: certify jobs-many at a
        // time, assemble deterministically after each join.
        const std::size_t batch = static_cast<std::size_t>(jobs);
        for (std::size_t start = 0; start < table.classes.size();
             start += batch) {
            const std::size_t stop =
                std::min(table.classes.size(), start + batch);
            std::vector<std::future<PositivityVerdict>> futures;
            for (std::size_t i = start; i < stop; ++i) {
                futures.push_back(std::async(
                    std::launch::async, [&complete, &table, i]() {
                        return certify_positive(complete,
                                                table.classes[i].edge_indices);
                    }));
            }
            for (std::size_t i = start; i < stop; ++i)
                table.classes[i].verdict = futures[i - start].get();
        }
    }

    table.peel_certified = std::all_of(
        table.classes.begin(), table.classes.end(), [](const auto& cls) {
            return cls.verdict &&
                   cls.verdict->kind == PositivityVerdict::Kind::positive;
        });
    return table;
}

} // namespace pmd

// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#include "pmdcert/random_tree.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pmdcert/error.hpp"

namespace pmd {

Hypergraph random_tree(int k, int edges, std::uint64_t seed) {
    if (k < 2) fail(ErrorCode::invalid_argument, "need k >= 2");
    if (edges < 1) fail(ErrorCode::invalid_argument, "need at least one edge");

    std::mt19937_64 rng(seed);
    const int n = k + (edges - 1) * (k - 1);

    std::vector<std::vector<int>> raw;
    std::vector<int> vertices;
    for (int v = 1; v <= k; ++v) vertices.push_back(v);
    raw.push_back(vertices);
    int next_vertex = k + 1;

    // Gluing each new edge to a single existing vertex keeps (T1) and the
    // unique-sequence condition intact.
    for (int e = 1; e < edges; ++e) {
        std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
        const int glue = vertices[pick(rng)];
        std::vector<int> edge{glue};
        for (int i = 0; i < k - 1; ++i) {
            edge.push_back(next_vertex);
            vertices.push_back(next_vertex);
            ++next_vertex;
        }
        raw.push_back(std::move(edge));
    }

    // Random relabeling so vertex ids carry no structural hints.
    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 1);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    for (auto& edge : raw)
        for (auto& v : edge) v = relabel[static_cast<std::size_t>(v) - 1];

    return Hypergraph::validate(n, raw);
}

} // namespace pmd

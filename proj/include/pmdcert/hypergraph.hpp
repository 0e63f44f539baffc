// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_HYPERGRAPH_HPP
#define PMDCERT_HYPERGRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pmd {

// An edge is a strictly increasing list of 1-based vertex indices.
using Edge = std::vector<int>;

// A hypergraph on vertices 1..n whose edge set is a clutter (no edge
// contains another).  The edge list is canonical: lexicographically sorted,
// no duplicates.  Immutable after construction; cheap to copy and safe to
// share across threads.
class Hypergraph {
public:
    // Canonicalizes and validates raw input: sorts vertices within edges,
    // sorts the edge list, rejects out-of-range vertices, empty edges,
    // duplicate edges and inclusion pairs.
    static Hypergraph validate(int vertex_count,
                               const std::vector<std::vector<int>>& raw_edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    const Edge& edge(std::size_t index) const;

    // deg_H(v) = number of edges containing v.
    int degree(int vertex) const;
    // Delta(H); 0 for an edgeless hypergraph.
    int max_degree() const;

    // Uniform edge cardinality, or nullopt when edges have mixed sizes or
    // there are no edges at all.
    std::optional<int> uniform_k() const;

    // Vertices contained in no edge.
    std::vector<int> isolated_vertices() const;

    bool operator==(const Hypergraph& other) const = default;

private:
    Hypergraph(int n, std::vector<Edge> edges)
        : n_(n), edges_(std::move(edges)) {}

    int n_ = 1;
    std::vector<Edge> edges_;
};

struct OverlapWitness {
    std::size_t edge_a = 0;
    std::size_t edge_b = 0;
    int shared_vertex = 0;
};

// True iff the referenced edges are pairwise vertex-disjoint; otherwise the
// witness names one overlapping pair.
struct MatchingCheck {
    bool is_matching = true;
    std::optional<OverlapWitness> overlap;
};

MatchingCheck check_matching(const Hypergraph& h,
                             const std::vector<std::size_t>& edge_indices);

// Tree recognition per (T1)/(T2).
//
// (T1) every two edges meet in at most one vertex.
// (T2) every vertex pair is joined by exactly one edge sequence
//      e_1..e_r with v only in e_1, v' only in e_r, consecutive edges
//      meeting in exactly one vertex and non-consecutive edges disjoint.
//      A pair lying in a common edge is joined by the length-1 sequence
//      consisting of that edge, so extra connections still disqualify.
struct TreeViolation {
    enum class Kind { not_uniform, edge_overlap, sequence_count };
    Kind kind = Kind::not_uniform;
    // edge_overlap: the two offending edges.
    std::size_t edge_a = 0, edge_b = 0;
    // sequence_count: the vertex pair and every sequence found (zero, or the
    // first two when uniqueness fails).  Sequences are edge-index lists and
    // can be re-checked against the hypergraph.
    int vertex_a = 0, vertex_b = 0;
    std::vector<std::vector<std::size_t>> sequences;
};

struct TreeCheckResult {
    bool is_k_uniform = false;
    int k = 0;
    bool is_tree = false;
    std::optional<TreeViolation> violation;
    std::vector<int> isolated;
};

TreeCheckResult check_tree(const Hypergraph& h);

// Smallest vertex of degree 1; requires check_tree(h).is_tree and at least
// one edge.
int find_leaf(const Hypergraph& h);

// Same hypergraph minus the listed edges; the vertex set is unchanged.
Hypergraph delete_edges(const Hypergraph& h,
                        const std::vector<std::size_t>& edge_indices);

// A connected component re-indexed to vertices 1..|V(component)|.
// vertex_map[local - 1] is the original vertex, edge_map[i] the original
// edge index.  Isolated vertices of the parent appear in no component.
struct SubHypergraph {
    Hypergraph graph;
    std::vector<int> vertex_map;
    std::vector<std::size_t> edge_map;
};

std::vector<SubHypergraph> connected_components(const Hypergraph& h);

std::string edge_to_string(const Edge& e);

} // namespace pmd

#endif

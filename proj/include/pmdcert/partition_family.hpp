// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_PARTITION_FAMILY_HPP
#define PMDCERT_PARTITION_FAMILY_HPP

#include <optional>
#include <vector>

#include "pmdcert/hypergraph.hpp"
#include "pmdcert/positive_matching.hpp"

namespace pmd {

// Label pair of a triple a < b < c: l1 = a + b, l2 = b + c.
struct LabelPair {
    int l1 = 0;
    int l2 = 0;
    auto operator<=>(const LabelPair&) const = default;
};

// One class of the label partition of the complete 3-uniform hypergraph:
// all triples sharing a label pair form a matching.
struct PartitionClass {
    LabelPair label;
    std::vector<Edge> triples;                // lexicographic
    std::vector<std::size_t> edge_indices;    // into the complete hypergraph
    std::optional<PositivityVerdict> verdict; // filled by scans
};

struct PartitionTable {
    int n = 0;
    std::vector<PartitionClass> classes; // sorted by (l1, l2)
    bool scanned = false;
    bool residual_mode = false;
    // Class peeling in (l1, l2) order always exhausts the edge set; when
    // every scanned verdict is positive this count is a certified pmd
    // upper bound for the complete hypergraph.
    int peel_upper_bound = 0;
    bool peel_certified = false;
};

// The complete 3-uniform hypergraph on [n].
Hypergraph complete_three_uniform(int n);

// Groups all C(n,3) triples by label pair and checks that the classes are
// pairwise disjoint matchings covering every triple.  Requires n >= 3.
PartitionTable build_partition(int n);

// |E_n| by direct enumeration of realizable label pairs.
long long count_labels(int n);

// (3 n^2 - 15 n + 20) / 2, always an integer for integer n.
long long closed_formula(int n);

// build_partition plus one positivity verdict per class.  In full mode each
// class is certified against the complete hypergraph (the conjecture's
// literal reading); in residual mode against the complete hypergraph minus
// all earlier classes in (l1, l2) order.  jobs > 1 certifies classes in
// parallel in full mode; the table is assembled deterministically.
PartitionTable scan_conjecture(int n, bool residual_mode = false, int jobs = 1);

} // namespace pmd

#endif

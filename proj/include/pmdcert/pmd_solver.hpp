// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_PMD_SOLVER_HPP
#define PMDCERT_PMD_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmdcert/hypergraph.hpp"
#include "pmdcert/positive_matching.hpp"

namespace pmd {

// Ordered partition E_1..E_p of the edge set where part i is a positive
// matching of the residual hypergraph (V, E \ (E_1 u .. u E_{i-1})), with
// one weight certificate per part against that residual.
struct PmdDecomposition {
    std::vector<std::vector<std::size_t>> parts; // edge indices, each sorted
    std::vector<WeightCertificate> certificates;
    std::string mode; // "tree" | "exact" | "greedy"
    // True if some tree part needed the LP instead of the construction's
    // weights; must stay false on valid trees.
    bool used_lp_fallback = false;
};

// Re-checks the full residual-certification chain of a decomposition.
bool verify_decomposition(const Hypergraph& h, const PmdDecomposition& d);

struct PmdBounds {
    int lower = 0;                // Delta(H)
    int upper = 0;                // tree construction or greedy strip count
    std::optional<int> exact;     // only if the exact search finished
};

struct SearchBudget {
    std::uint64_t max_nodes = 1'000'000;
};

struct ExactResult {
    std::optional<int> value;               // set iff search completed
    PmdDecomposition decomposition;         // best decomposition found
    PmdBounds bounds;
    bool budget_exhausted = false;
    std::uint64_t nodes_expanded = 0;
};

// Delta(H)-part decomposition of a k-uniform tree following the
// leaf-rooted peeling construction; every part below the first is chosen
// star-by-star and certified by construction weights.  Throws not_a_tree /
// no_edges; star_decomposition_violation signals an internal consistency
// failure and never fires on valid trees.
PmdDecomposition pmd_tree(const Hypergraph& h);

// Greedy upper bound: strip greedy positive matchings until no edge is
// left.  Each strip is certified against its residual.
PmdDecomposition pmd_greedy(const Hypergraph& h);

// Exact pmd via branch and bound over first parts, warm-started by the
// tree/greedy decomposition.  At most 64 edges.  Deterministic value; the
// witness is the first optimal decomposition in canonical search order.
ExactResult pmd_exact(const Hypergraph& h, const SearchBudget& budget = {});

// lower = Delta(H); upper from the tree construction when H is a tree,
// otherwise from greedy strips.  Never runs the exact search.
PmdBounds pmd_bounds(const Hypergraph& h);

} // namespace pmd

#endif

// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_POSITIVE_MATCHING_HPP
#define PMDCERT_POSITIVE_MATCHING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pmdcert/hypergraph.hpp"
#include "pmdcert/linear_system.hpp"

namespace pmd {

// Vertex weights w certifying a positive matching: w(e) > 0 for matching
// edges and w(e) < 0 for every other edge of the certified edge set.
// weights[v - 1] is the weight of vertex v.
struct WeightCertificate {
    std::vector<Rational> weights;

    Rational edge_weight(const Edge& e) const;
};

struct PositivityVerdict {
    enum class Kind { positive, not_positive, not_a_matching };

    Kind kind = Kind::positive;
    std::vector<std::size_t> matching;        // the queried matching, sorted
    std::vector<std::size_t> rows;            // edge indices backing the LP rows
    std::optional<WeightCertificate> certificate; // positive
    std::vector<Rational> farkas;             // not_positive, aligned with rows
    std::optional<OverlapWitness> overlap;    // not_a_matching
};

// The linear system with one variable per vertex and one strict row per
// edge in `active` (sign chosen by membership in `matching`).
LinearSystem induced_system(const Hypergraph& h,
                            const std::vector<std::size_t>& active,
                            const std::vector<std::size_t>& matching);

// Decides whether `matching` is a positive matching of the sub-hypergraph
// (V, {edges in active}).  Every branch of the verdict carries a
// re-verifiable proof.
PositivityVerdict certify_positive_in(const Hypergraph& h,
                                      const std::vector<std::size_t>& active,
                                      const std::vector<std::size_t>& matching);

// Same against the full edge set of h.
PositivityVerdict certify_positive(const Hypergraph& h,
                                   const std::vector<std::size_t>& matching);

// Exact re-check of a verdict against the sub-hypergraph it was issued for.
bool verify_verdict(const Hypergraph& h, const PositivityVerdict& verdict);

// Inclusion-maximal positive matching, grown in canonical edge order with
// repeated sweeps until no single edge extends it.  Requires >= 1 active
// edge; the result is nonempty because singletons are always positive in a
// clutter.
struct GreedyResult {
    std::vector<std::size_t> matching;
    WeightCertificate certificate;
};

GreedyResult greedy_positive_matching_in(const Hypergraph& h,
                                         const std::vector<std::size_t>& active);
GreedyResult greedy_positive_matching(const Hypergraph& h);

} // namespace pmd

#endif

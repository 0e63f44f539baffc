// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_LSS_HPP
#define PMDCERT_LSS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmdcert/hypergraph.hpp"
#include "pmdcert/pmd_solver.hpp"
#include "pmdcert/polynomial.hpp"

namespace pmd {

// Edge generator f_e = sum_{j=1..d} prod_{i in e} y_{ij}; one polynomial per
// edge in canonical edge order.
std::vector<Polynomial> generators(const Hypergraph& h, int d);
Polynomial edge_generator(const Edge& e, int d);

// u x d matrix of squarefree degree-(k-1) monomials presenting the quotient
// by the edge ideal as a symmetric algebra over the link of a pivot vertex.
// Row i is the (k-1)-set link_sets[i] (lexicographic); entry (i,j) is the
// product of y_{l,j} over that set.
struct PresentationMatrix {
    int n = 0;
    int k = 0;
    int d = 0;
    int pivot = 0;
    std::vector<std::vector<int>> link_sets;

    std::size_t rows() const { return link_sets.size(); }
    Monomial entry(std::size_t row, int col) const; // col in 1..d
};

PresentationMatrix presentation_matrix(const Hypergraph& h, int pivot, int d);

// Symbolic determinant of the leading t x t submatrix, cofactor expansion
// with column-subset memoization.  1 <= t <= min(u, d).
Polynomial leading_minor(const PresentationMatrix& m, int t);

// The minor-nonvanishing mechanism: nonzero, every support monomial
// squarefree with exactly k-1 variables in each slot 1..t, which places the
// polynomial outside the edge ideal.
bool support_check(const Polynomial& minor, int t, int k);

// Join hypergraph witness: every (k-1)-set in W extended by every apex in C
// is an edge of H.  Containment with |W| + c > d obstructs primality.
struct ObstructionWitness {
    int c = 0;
    std::vector<int> apexes;              // the set C, sorted
    std::vector<std::vector<int>> link;   // the set W, sorted (k-1)-sets
    int value = 0;                        // |W| + c
};

// Exhaustive search over apex sets of size 1..max_c (clamped so that
// k-1 <= n-c), keeping the maximal |W(C)| + c with W(C) nonempty.
// Deterministic: ties resolved toward smaller c, then lexicographic C.
// Returns nullopt only when no apex set has a nonempty link.
std::optional<ObstructionWitness> obstruction_search(const Hypergraph& h,
                                                     int max_c);

// One-directional implication chain for the ideal of a k-uniform H at a
// given d.  "Unknown" never turns into a negative claim.
struct StatusReport {
    int n = 0;
    int k = 0;
    int d = 0;
    PmdBounds pmd;
    int pmd_upper = 0; // best proven upper bound (exact when available)
    std::optional<ObstructionWitness> obstruction;
    int obstruction_value = 0;
    bool ci_known = false;        // pmd_upper <= d
    bool prime_known = false;     // pmd_upper <= d - 1
    bool not_prime_known = false; // obstruction_value > d
    // Sections are irreducible for every d in this range (may be empty).
    long long irreducible_from = 0;
    long long irreducible_to = 0;
    long long rank_bound = 0; // C(n+k-1, k) - n + 1
};

struct StatusOptions {
    std::uint64_t exact_budget_nodes = 5'000; // 0 disables the exact search
    std::size_t exact_max_edges = 20;
    int obstruction_max_c = 2; // apex search is exponential in this
};

StatusReport status_report(const Hypergraph& h, int d,
                           const StatusOptions& options = {});

enum class CasDialect { macaulay2, singular };

// Plain-text ideal definition plus primality / complete intersection check
// commands for an external algebra system.  Byte-deterministic.
std::string emit_cas_script(const Hypergraph& h, int d, CasDialect dialect,
                            long long characteristic = 0);

// C(n, r) with overflow detection (throws internal_error on overflow).
long long binomial(long long n, long long r);

} // namespace pmd

#endif

// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_RANDOM_TREE_HPP
#define PMDCERT_RANDOM_TREE_HPP

#include <cstdint>

#include "pmdcert/hypergraph.hpp"

namespace pmd {

// Seeded random k-uniform tree with the given number of edges: starts from
// one edge and repeatedly glues a fresh edge onto a uniformly chosen
// existing vertex, then applies a random vertex relabeling.  Every output
// passes check_tree.  k >= 2, edges >= 1.
Hypergraph random_tree(int k, int edges, std::uint64_t seed);

} // namespace pmd

#endif

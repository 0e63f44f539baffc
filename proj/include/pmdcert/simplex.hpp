// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_SIMPLEX_HPP
#define PMDCERT_SIMPLEX_HPP

#include "pmdcert/linear_system.hpp"

namespace pmd {

// Exact rational feasibility test for a system of strict and weak linear
// inequalities.  Deterministic: Bland's pivoting rule, fixed column layout.
// The returned verdict always passes verify(); an internal_error is thrown
// if it would not (which would indicate a solver bug).
//
// An empty system is feasible with the zero point.
FeasibilityVerdict solve(const LinearSystem& sys);

} // namespace pmd

#endif

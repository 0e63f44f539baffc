// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_LINEAR_SYSTEM_HPP
#define PMDCERT_LINEAR_SYSTEM_HPP

#include <string>
#include <vector>

#include "pmdcert/rational.hpp"

namespace pmd {

enum class Relation { less, less_eq, greater, greater_eq };

bool is_strict(Relation rel);
const char* relation_symbol(Relation rel);

struct LinearTerm {
    int var = 0; // 0-based column index
    Rational coeff;
};

struct LinearRow {
    std::vector<LinearTerm> terms; // sparse, var indices < num_vars
    Relation rel = Relation::less_eq;
    Rational rhs;
};

struct LinearSystem {
    int num_vars = 0;
    std::vector<LinearRow> rows;
};

// Exact evaluation of a row's left-hand side at a point.
Rational evaluate_row(const LinearRow& row, const std::vector<Rational>& point);

// Either a feasible point satisfying every row exactly (strict rows
// strictly), or a vector of nonnegative Farkas multipliers, one per row,
// combining the rows (oriented as <= / <) into 0 <= c with c < 0, or into
// 0 < 0 with a positive multiplier on some strict row.
struct FeasibilityVerdict {
    bool feasible = false;
    std::vector<Rational> point;       // size num_vars when feasible
    std::vector<Rational> multipliers; // size rows when infeasible
};

// Re-checks a verdict from scratch with exact arithmetic.  Throws
// shape_mismatch when the certificate dimensions do not fit the system.
bool verify(const LinearSystem& sys, const FeasibilityVerdict& verdict);

// Rewrites a homogeneous strict system (every row strict with rhs 0) into
// the equivalent weak form: "> 0" becomes ">= 1" and "< 0" becomes "<= -1".
// Throws not_homogeneous_strict otherwise.
LinearSystem strict_homogeneous_normalize(const LinearSystem& sys);

// Human-readable dump, one row per line.
std::string to_string(const LinearSystem& sys);

} // namespace pmd

#endif

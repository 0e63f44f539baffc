// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#include "pmdcert/simplex.hpp"

#include <sstream>
#include <vector>

#include "pmdcert/error.hpp"

namespace pmd {

bool is_strict(Relation rel) {
    return rel == Relation::less || rel == Relation::greater;
}

const char* relation_symbol(Relation rel) {
    switch (rel) {
        case Relation::less: return "<";
        case Relation::less_eq: return "<=";
        case Relation::greater: return ">";
        case Relation::greater_eq: return ">=";
    }
    return "?";
}

Rational evaluate_row(const LinearRow& row, const std::vector<Rational>& point) {
    Rational sum = 0;
    for (const auto& term : row.terms) {
        if (term.var < 0 || term.var >= static_cast<int>(point.size()))
            fail(ErrorCode::shape_mismatch,
                 "variable index " + std::to_string(term.var) +
                     " outside the point dimension");
        sum += term.coeff * point[static_cast<std::size_t>(term.var)];
    }
    return sum;
}

namespace {

struct OrientedRow {
    std::vector<Rational> coeffs; // dense, length num_vars
    Rational rhs;
    bool strict = false;
};

// All rows rewritten as "a.x < b" / "a.x <= b".
std::vector<OrientedRow> orient(const LinearSystem& sys) {
    std::vector<OrientedRow> rows;
    rows.reserve(sys.rows.size());
    for (const auto& row : sys.rows) {
        OrientedRow oriented;
        oriented.coeffs.assign(static_cast<std::size_t>(sys.num_vars), 0);
        const bool negate =
            row.rel == Relation::greater || row.rel == Relation::greater_eq;
        for (const auto& term : row.terms) {
            if (term.var < 0 || term.var >= sys.num_vars)
                fail(ErrorCode::shape_mismatch,
                     "variable index " + std::to_string(term.var) +
                         " outside 0.." + std::to_string(sys.num_vars - 1));
            Rational c = negate ? Rational(-term.coeff) : term.coeff;
            oriented.coeffs[static_cast<std::size_t>(term.var)] += c;
        }
        oriented.rhs = negate ? Rational(-row.rhs) : row.rhs;
        oriented.strict = is_strict(row.rel);
        rows.push_back(std::move(oriented));
    }
    return rows;
}

// Dense exact simplex tableau, Bland's rule.  Free variables are split into
// nonnegative pairs; strict rows share one gap variable eps whose maximal
// value decides strict feasibility.
class Tableau {
public:
    Tableau(int num_vars, const std::vector<OrientedRow>& rows)
        : nv_(num_vars), m_user_(rows.size()) {
        for (const auto& r : rows) any_strict_ = any_strict_ || r.strict;
        n_rows_ = m_user_ + (any_strict_ ? 1 : 0);
        eps_p_ = 2 * nv_;
        eps_q_ = 2 * nv_ + 1;
        slack_base_ = 2 * nv_ + (any_strict_ ? 2 : 0);

        flipped_.assign(n_rows_, false);
        std::size_t art_count = 0;
        for (std::size_t i = 0; i < m_user_; ++i)
            if (sgn(rows[i].rhs) < 0) ++art_count;
        art_base_ = slack_base_ + n_rows_;
        ncols_ = art_base_ + art_count;

        a_.assign(n_rows_, std::vector<Rational>(ncols_, Rational(0)));
        rhs_.assign(n_rows_, Rational(0));
        basis_.assign(n_rows_, 0);
        allowed_.assign(ncols_, true);
        id_col_.assign(n_rows_, 0);

        std::size_t next_art = art_base_;
        for (std::size_t i = 0; i < m_user_; ++i) {
            auto& row = a_[i];
            for (int j = 0; j < nv_; ++j) {
                row[static_cast<std::size_t>(j)] = rows[i].coeffs[j];
                row[static_cast<std::size_t>(nv_ + j)] = -rows[i].coeffs[j];
            }
            if (rows[i].strict) {
                row[eps_p_] = 1;
                row[eps_q_] = -1;
            }
            row[slack_base_ + i] = 1;
            rhs_[i] = rows[i].rhs;
            if (sgn(rhs_[i]) < 0) {
                for (auto& c : row) c = -c;
                rhs_[i] = -rhs_[i];
                flipped_[i] = true;
                row[next_art] = 1;
                basis_[i] = static_cast<int>(next_art);
                id_col_[i] = next_art;
                ++next_art;
            } else {
                basis_[i] = static_cast<int>(slack_base_ + i);
                id_col_[i] = slack_base_ + i;
            }
        }
        if (any_strict_) {
            const std::size_t b = m_user_;
            a_[b][eps_p_] = 1;
            a_[b][eps_q_] = -1;
            a_[b][slack_base_ + b] = 1;
            rhs_[b] = 1;
            basis_[b] = static_cast<int>(slack_base_ + b);
            id_col_[b] = slack_base_ + b;
        }
        has_artificials_ = art_count > 0;
    }

    bool any_strict() const { return any_strict_; }
    bool has_artificials() const { return has_artificials_; }

    void set_objective(std::vector<Rational> cost) {
        cost_ = std::move(cost);
        obj_ = cost_;
        obj_value_ = 0;
        for (std::size_t i = 0; i < n_rows_; ++i) {
            const std::size_t b = static_cast<std::size_t>(basis_[i]);
            if (sgn(obj_[b]) == 0) continue;
            const Rational factor = obj_[b];
            obj_value_ += factor * rhs_[i];
            for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= factor * a_[i][j];
        }
    }

    // Maximizes the current objective; returns the optimal value.
    Rational maximize() {
        for (;;) {
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (allowed_[j] && sgn(obj_[j]) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols_) return obj_value_;

            std::size_t leave = n_rows_;
            Rational best_ratio;
            for (std::size_t i = 0; i < n_rows_; ++i) {
                if (sgn(a_[i][enter]) <= 0) continue;
                Rational ratio = rhs_[i] / a_[i][enter];
                if (leave == n_rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == n_rows_)
                fail(ErrorCode::internal_error,
                     "unbounded objective in a bounded feasibility program");
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = Rational(1) / a_[row][col];
        for (auto& c : a_[row]) c *= inv;
        rhs_[row] *= inv;
        a_[row][col] = 1; // exact, but keep it tidy against 1/x*x churn
        for (std::size_t i = 0; i < n_rows_; ++i) {
            if (i == row || sgn(a_[i][col]) == 0) continue;
            const Rational factor = a_[i][col];
            rhs_[i] -= factor * rhs_[row];
            for (std::size_t j = 0; j < ncols_; ++j)
                a_[i][j] -= factor * a_[row][j];
        }
        if (sgn(obj_[col]) != 0) {
            const Rational factor = obj_[col];
            obj_value_ += factor * rhs_[row];
            for (std::size_t j = 0; j < ncols_; ++j)
                obj_[j] -= factor * a_[row][j];
        }
        basis_[row] = static_cast<int>(col);
    }

    // After a zero-value phase 1: pivot basic artificials out where
    // possible; rows that are zero on every real column are inert.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < n_rows_; ++i) {
            if (static_cast<std::size_t>(basis_[i]) < art_base_) continue;
            for (std::size_t j = 0; j < art_base_; ++j) {
                if (sgn(a_[i][j]) != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
        for (std::size_t j = art_base_; j < ncols_; ++j) allowed_[j] = false;
    }

    std::vector<Rational> phase1_cost() const {
        std::vector<Rational> cost(ncols_, Rational(0));
        for (std::size_t j = art_base_; j < ncols_; ++j) cost[j] = -1;
        return cost;
    }

    std::vector<Rational> phase2_cost() const {
        std::vector<Rational> cost(ncols_, Rational(0));
        cost[eps_p_] = 1;
        cost[eps_q_] = -1;
        return cost;
    }

    // Dual multipliers of the user rows, mapped back through the row flips.
    // y_i = cost(id_i) - reduced_cost(id_i) gives the tableau-row dual; the
    // flip sign restores the multiplier of the oriented inequality.
    std::vector<Rational> user_multipliers() const {
        std::vector<Rational> mult;
        mult.reserve(m_user_);
        for (std::size_t i = 0; i < m_user_; ++i) {
            Rational y = cost_[id_col_[i]] - obj_[id_col_[i]];
            if (flipped_[i]) y = -y;
            mult.push_back(y);
        }
        return mult;
    }

    std::vector<Rational> extract_point() const {
        std::vector<Rational> value(ncols_, Rational(0));
        for (std::size_t i = 0; i < n_rows_; ++i)
            value[static_cast<std::size_t>(basis_[i])] = rhs_[i];
        std::vector<Rational> x;
        x.reserve(static_cast<std::size_t>(nv_));
        for (int j = 0; j < nv_; ++j)
            x.push_back(value[static_cast<std::size_t>(j)] -
                        value[static_cast<std::size_t>(nv_ + j)]);
        return x;
    }

private:
    int nv_;
    std::size_t m_user_;
    std::size_t n_rows_ = 0;
    bool any_strict_ = false;
    bool has_artificials_ = false;
    std::size_t eps_p_ = 0, eps_q_ = 0, slack_base_ = 0, art_base_ = 0;
    std::size_t ncols_ = 0;

    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> rhs_;
    std::vector<int> basis_;
    std::vector<char> allowed_;
    std::vector<std::size_t> id_col_;
    std::vector<bool> flipped_;
    std::vector<Rational> cost_;
    std::vector<Rational> obj_;
    Rational obj_value_;
};

FeasibilityVerdict checked(const LinearSystem& sys, FeasibilityVerdict verdict) {
    if (!verify(sys, verdict))
        fail(ErrorCode::internal_error,
             "solver produced a certificate that does not verify");
    return verdict;
}

} // namespace

FeasibilityVerdict solve(const LinearSystem& sys) {
    if (sys.num_vars < 0)
        fail(ErrorCode::invalid_argument, "negative variable count");
    FeasibilityVerdict verdict;
    if (sys.rows.empty()) {
        verdict.feasible = true;
        verdict.point.assign(static_cast<std::size_t>(sys.num_vars), Rational(0));
        return checked(sys, verdict);
    }

    const auto rows = orient(sys);
    Tableau tableau(sys.num_vars, rows);

    if (tableau.has_artificials()) {
        tableau.set_objective(tableau.phase1_cost());
        const Rational infeasibility = tableau.maximize();
        if (sgn(infeasibility) < 0) {
            verdict.feasible = false;
            verdict.multipliers = tableau.user_multipliers();
            return checked(sys, verdict);
        }
        tableau.drive_out_artificials();
    }

    if (!tableau.any_strict()) {
        verdict.feasible = true;
        verdict.point = tableau.extract_point();
        return checked(sys, verdict);
    }

    tableau.set_objective(tableau.phase2_cost());
    const Rational gap = tableau.maximize();
    if (sgn(gap) > 0) {
        verdict.feasible = true;
        verdict.point = tableau.extract_point();
    } else {
        verdict.feasible = false;
        verdict.multipliers = tableau.user_multipliers();
    }
    return checked(sys, verdict);
}

bool verify(const LinearSystem& sys, const FeasibilityVerdict& verdict) {
    if (verdict.feasible) {
        if (verdict.point.size() != static_cast<std::size_t>(sys.num_vars))
            fail(ErrorCode::shape_mismatch,
                 "point dimension " + std::to_string(verdict.point.size()) +
                     " != " + std::to_string(sys.num_vars));
        for (const auto& row : sys.rows) {
            const Rational lhs = evaluate_row(row, verdict.point);
            const int cmp = ::cmp(lhs, row.rhs);
            switch (row.rel) {
                case Relation::less: if (!(cmp < 0)) return false; break;
                case Relation::less_eq: if (!(cmp <= 0)) return false; break;
                case Relation::greater: if (!(cmp > 0)) return false; break;
                case Relation::greater_eq: if (!(cmp >= 0)) return false; break;
            }
        }
        return true;
    }

    if (verdict.multipliers.size() != sys.rows.size())
        fail(ErrorCode::shape_mismatch,
             "multiplier count " + std::to_string(verdict.multipliers.size()) +
                 " != row count " + std::to_string(sys.rows.size()));
    const auto rows = orient(sys);
    std::vector<Rational> combined(static_cast<std::size_t>(sys.num_vars), 0);
    Rational beta = 0;
    bool strict_positive = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& y = verdict.multipliers[i];
        if (sgn(y) < 0) return false;
        if (sgn(y) == 0) continue;
        for (int j = 0; j < sys.num_vars; ++j)
            combined[static_cast<std::size_t>(j)] += y * rows[i].coeffs[j];
        beta += y * rows[i].rhs;
        strict_positive = strict_positive || rows[i].strict;
    }
    for (const auto& c : combined)
        if (sgn(c) != 0) return false;
    // 0 <= beta must be contradictory: beta < 0 outright, or beta = 0 with a
    // strict row participating (0 < 0).
    return sgn(beta) < 0 || (sgn(beta) == 0 && strict_positive);
}

LinearSystem strict_homogeneous_normalize(const LinearSystem& sys) {
    LinearSystem out;
    out.num_vars = sys.num_vars;
    out.rows.reserve(sys.rows.size());
    for (const auto& row : sys.rows) {
        if (!is_strict(row.rel) || sgn(row.rhs) != 0)
            fail(ErrorCode::not_homogeneous_strict,
                 "row is not strict homogeneous: " + to_string(LinearSystem{
                     sys.num_vars, {row}}));
        LinearRow rewritten = row;
        if (row.rel == Relation::greater) {
            rewritten.rel = Relation::greater_eq;
            rewritten.rhs = 1;
        } else {
            rewritten.rel = Relation::less_eq;
            rewritten.rhs = -1;
        }
        out.rows.push_back(std::move(rewritten));
    }
    return out;
}

std::string to_string(const LinearSystem& sys) {
    std::ostringstream out;
    for (const auto& row : sys.rows) {
        bool first = true;
        for (const auto& term : row.terms) {
            const int s = sgn(term.coeff);
            if (s == 0) continue;
            if (!first) out << (s > 0 ? " + " : " - ");
            else if (s < 0) out << "-";
            Rational abs_coeff = abs(term.coeff);
            if (abs_coeff != 1) out << abs_coeff.get_str() << "*";
            out << "x" << term.var;
            first = false;
        }
        if (first) out << "0";
        out << " " << relation_symbol(row.rel) << " " << row.rhs.get_str()
            << "\n";
    }
    return out.str();
}

} // namespace pmd

// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_POLYNOMIAL_HPP
#define PMDCERT_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "pmdcert/rational.hpp"

namespace pmd {

// Variable y_{vertex,slot} with vertex in [n] and slot in [d].
struct VarId {
    int vertex = 0;
    int slot = 0;
    auto operator<=>(const VarId&) const = default;
};

// Exponent list sorted by variable, exponents > 0.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<VarId, int>> factors);

    static Monomial variable(VarId v);
    // Product of y_{v,slot} over the given vertices (each exponent 1).
    static Monomial product(const std::vector<int>& vertices, int slot);

    const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }
    int degree() const;
    bool is_squarefree() const;
    // Number of distinct variables whose slot equals `slot`.
    int variables_in_slot(int slot) const;

    Monomial operator*(const Monomial& other) const;
    bool operator==(const Monomial&) const = default;

    std::string to_string() const;

private:
    std::vector<std::pair<VarId, int>> factors_;
};

// Degree first, then lexicographic on the factor list; a fixed total order
// that makes polynomial term maps canonical.
struct DegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero();
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(Monomial m, const Rational& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational, DegLexLess>& terms() const { return terms_; }
    int degree() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial&) const = default;

    // Substitutes value for every variable.
    Rational evaluate_all(const Rational& value) const;

    // Terms in descending order, e.g. "y[1,1]*y[2,1] - y[1,2]*y[2,2]".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& coeff);

    std::map<Monomial, Rational, DegLexLess> terms_;
};

} // namespace pmd

#endif

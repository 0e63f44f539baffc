// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#include "pmdcert/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "pmdcert/error.hpp"

namespace pmd {

Monomial::Monomial(std::vector<std::pair<VarId, int>> factors)
    : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    // Merge repeated variables, drop zero exponents.
    std::vector<std::pair<VarId, int>> merged;
    for (const auto& [var, exp] : factors_) {
        if (exp < 0)
            fail(ErrorCode::invalid_argument, "negative exponent in monomial");
        if (exp == 0) continue;
        if (!merged.empty() && merged.back().first == var)
            merged.back().second += exp;
        else
            merged.emplace_back(var, exp);
    }
    factors_ = std::move(merged);
}

Monomial Monomial::variable(VarId v) { return Monomial({{v, 1}}); }

Monomial Monomial::product(const std::vector<int>& vertices, int slot) {
    std::vector<std::pair<VarId, int>> factors;
    factors.reserve(vertices.size());
    for (int v : vertices) factors.push_back({VarId{v, slot}, 1});
    return Monomial(std::move(factors));
}

int Monomial::degree() const {
    int total = 0;
    for (const auto& [var, exp] : factors_) total += exp;
    return total;
}

bool Monomial::is_squarefree() const {
    for (const auto& [var, exp] : factors_)
        if (exp != 1) return false;
    return true;
}

int Monomial::variables_in_slot(int slot) const {
    int count = 0;
    for (const auto& [var, exp] : factors_)
        if (var.slot == slot) ++count;
    return count;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::pair<VarId, int>> factors = factors_;
    factors.insert(factors.end(), other.factors_.begin(), other.factors_.end());
    return Monomial(std::move(factors));
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [var, exp] : factors_) {
        if (!first) out << "*";
        out << "y[" << var.vertex << "," << var.slot << "]";
        if (exp > 1) out << "^" << exp;
        first = false;
    }
    return out.str();
}

bool DegLexLess::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return a.factors() < b.factors();
}

Polynomial Polynomial::zero() { return Polynomial(); }

Polynomial Polynomial::constant(const Rational& c) {
    return monomial(Monomial(), c);
}

Polynomial Polynomial::monomial(Monomial m, const Rational& coeff) {
    Polynomial p;
    p.add_term(m, coeff);
    return p;
}

int Polynomial::degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, m.degree());
    return best;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (sign(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sign(it->second) == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial result = *this;
    result += other;
    return result;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial result = *this;
    result -= other;
    return result;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial result;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            result.add_term(ma * mb, ca * cb);
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial result;
    for (const auto& [m, c] : terms_) result.add_term(m, Rational(-c));
    return result;
}

Rational Polynomial::evaluate_all(const Rational& value) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [var, exp] : m.factors())
            for (int i = 0; i < exp; ++i) term *= value;
        total += term;
    }
    return total;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const int s = sign(c);
        if (first) {
            if (s < 0) out << "-";
        } else {
            out << (s > 0 ? " + " : " - ");
        }
        const Rational mag = abs(c);
        const bool unit = mag == 1 && !m.factors().empty();
        if (!unit) out << mag.get_str();
        if (!m.factors().empty()) {
            if (!unit) out << "*";
            out << m.to_string();
        }
        first = false;
    }
    return out.str();
}

} // namespace pmd

// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#include "pmdcert/lss.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pmdcert/error.hpp"

namespace pmd {

long long binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long result = 1;
    for (long long i = 1; i <= r; ++i) {
        if (result > (1LL << 62) / (n - r + i))
            fail(ErrorCode::internal_error, "binomial overflow");
        result = result * (n - r + i) / i;
    }
    return result;
}

Polynomial edge_generator(const Edge& e, int d) {
    if (d < 1) fail(ErrorCode::invalid_d, "need d >= 1, got " + std::to_string(d));
    Polynomial f;
    for (int j = 1; j <= d; ++j)
        f += Polynomial::monomial(Monomial::product(e, j));
    return f;
}

std::vector<Polynomial> generators(const Hypergraph& h, int d) {
    if (d < 1) fail(ErrorCode::invalid_d, "need d >= 1, got " + std::to_string(d));
    std::vector<Polynomial> gens;
    gens.reserve(h.edge_count());
    for (const auto& e : h.edges()) gens.push_back(edge_generator(e, d));
    return gens;
}

PresentationMatrix presentation_matrix(const Hypergraph& h, int pivot, int d) {
    if (d < 1) fail(ErrorCode::invalid_d, "need d >= 1, got " + std::to_string(d));
    const auto k = h.uniform_k();
    if (!k || *k < 2)
        fail(ErrorCode::not_uniform,
             "presentation matrix requires a k-uniform hypergraph with k >= 2");
    if (pivot < 1 || pivot > h.vertex_count())
        fail(ErrorCode::vertex_out_of_range,
             "pivot " + std::to_string(pivot) + " outside 1.." +
                 std::to_string(h.vertex_count()));

    PresentationMatrix m;
    m.n = h.vertex_count();
    m.k = *k;
    m.d = d;
    m.pivot = pivot;
    for (const auto& e : h.edges()) {
        if (!std::binary_search(e.begin(), e.end(), pivot)) continue;
        std::vector<int> link;
        for (int v : e)
            if (v != pivot) link.push_back(v);
        m.link_sets.push_back(std::move(link));
    }
    if (m.link_sets.empty())
        fail(ErrorCode::pivot_isolated,
             "pivot " + std::to_string(pivot) + " lies in no edge");
    std::sort(m.link_sets.begin(), m.link_sets.end());
    return m;
}

Monomial PresentationMatrix::entry(std::size_t row, int col) const {
    if (row >= link_sets.size() || col < 1 || col > d)
        fail(ErrorCode::index_out_of_range, "presentation matrix entry out of range");
    return Monomial::product(link_sets[row], col);
}

Polynomial leading_minor(const PresentationMatrix& m, int t) {
    const int u = static_cast<int>(m.rows());
    if (t < 1 || t > std::min(u, m.d))
        fail(ErrorCode::t_out_of_range,
             "t = " + std::to_string(t) + " outside 1..min(u=" +
                 std::to_string(u) + ", d=" + std::to_string(m.d) + ")");

    // Laplace expansion along the last remaining row, memoized on the set
    // of still-available columns.
    std::map<std::uint32_t, Polynomial> memo;
    auto det = [&](auto&& self, std::uint32_t cols) -> Polynomial {
        if (cols == 0) return Polynomial::constant(1);
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        const int row = __builtin_popcount(cols) - 1;
        Polynomial result;
        int position = 0;
        for (int c = 0; c < t; ++c) {
            if (!(cols >> c & 1)) continue;
            const Rational coeff = (row + position) % 2 == 0 ? 1 : -1;
            Polynomial sub = self(self, cols & ~(std::uint32_t(1) << c));
            result += Polynomial::monomial(
                          m.entry(static_cast<std::size_t>(row), c + 1),
                          coeff) *
                      sub;
            ++position;
        }
        memo.emplace(cols, result);
        return result;
    };
    return det(det, (std::uint32_t(1) << t) - 1);
}

bool support_check(const Polynomial& minor, int t, int k) {
    if (minor.is_zero()) return false;
    for (const auto& [mono, coeff] : minor.terms()) {
        if (!mono.is_squarefree()) return false;
        int covered = 0;
        for (int j = 1; j <= t; ++j) {
            if (mono.variables_in_slot(j) != k - 1) return false;
            covered += k - 1;
        }
        if (mono.degree() != covered) return false;
    }
    return true;
}

std::optional<ObstructionWitness> obstruction_search(const Hypergraph& h,
                                                     int max_c) {
    const auto k_opt = h.uniform_k();
    if (!k_opt || *k_opt < 2)
        fail(ErrorCode::not_uniform,
             "obstruction search requires a k-uniform hypergraph with k >= 2");
    const int k = *k_opt;
    const int n = h.vertex_count();

    // link[x] = the sorted (k-1)-sets w with w u {x} an edge.  The join set
    // W(C) is the intersection of the apex links: a member containing some
    // apex y would need the (k-1)-element set w u {y} = w to be an edge, so
    // w avoids C automatically.
    std::vector<std::vector<Edge>> link(static_cast<std::size_t>(n) + 1);
    for (const auto& e : h.edges()) {
        for (int x : e) {
            Edge w;
            for (int v : e)
                if (v != x) w.push_back(v);
            link[static_cast<std::size_t>(x)].push_back(std::move(w));
        }
    }
    for (auto& l : link) std::sort(l.begin(), l.end());

    const int c_limit = std::min(max_c, n - k + 1); // keep k-1 <= n-c
    std::optional<ObstructionWitness> best;
    const auto better = [&](int value, const std::vector<int>& apexes) {
        if (!best) return true;
        if (value != best->value) return value > best->value;
        const int c = static_cast<int>(apexes.size());
        if (c != best->c) return c < best->c;
        return apexes < best->apexes;
    };

    // Depth-first extension of the apex set with a running intersection;
    // branches with an empty join set cannot recover and are cut.
    std::vector<int> apexes;
    auto extend = [&](auto&& self, int from,
                      const std::vector<Edge>& current) -> void {
        if (!apexes.empty() && !current.empty()) {
            const int value =
                static_cast<int>(current.size() + apexes.size());
            if (better(value, apexes))
                best = ObstructionWitness{static_cast<int>(apexes.size()),
                                          apexes, current, value};
        }
        if (static_cast<int>(apexes.size()) >= c_limit) return;
        for (int x = from; x <= n; ++x) {
            std::vector<Edge> next;
            if (apexes.empty()) {
                next = link[static_cast<std::size_t>(x)];
            } else {
                std::set_intersection(
                    current.begin(), current.end(),
                    link[static_cast<std::size_t>(x)].begin(),
                    link[static_cast<std::size_t>(x)].end(),
                    std::back_inserter(next));
            }
            if (next.empty()) continue;
            apexes.push_back(x);
            self(self, x + 1, next);
            apexes.pop_back();
        }
    };
    extend(extend, 1, {});
    return best;
}

StatusReport status_report(const Hypergraph& h, int d,
                           const StatusOptions& options) {
    const auto k_opt = h.uniform_k();
    if (!k_opt || *k_opt < 2)
        fail(ErrorCode::not_uniform,
             "status report requires a k-uniform hypergraph with k >= 2");
    if (d < 1) fail(ErrorCode::invalid_d, "need d >= 1, got " + std::to_string(d));

    StatusReport report;
    report.n = h.vertex_count();
    report.k = *k_opt;
    report.d = d;

    report.pmd = pmd_bounds(h);
    if (options.exact_budget_nodes > 0 &&
        h.edge_count() <= options.exact_max_edges) {
        ExactResult exact =
            pmd_exact(h, SearchBudget{options.exact_budget_nodes});
        report.pmd = exact.bounds;
    }
    report.pmd_upper = report.pmd.exact.value_or(report.pmd.upper);

    report.obstruction = obstruction_search(h, options.obstruction_max_c);
    report.obstruction_value =
        report.obstruction ? report.obstruction->value : 0;

    // pmd(H) <= d           =>  the ideal at d is a complete intersection;
    // pmd(H) <= d-1         =>  the ideal at d is prime;
    // containment with |W| + c > d  =>  the ideal at d is not prime.
    // Absence of a sufficient condition proves nothing.
    report.ci_known = report.pmd_upper <= d;
    report.prime_known = report.pmd_upper <= d - 1;
    report.not_prime_known = report.obstruction_value > d;
    if (report.prime_known && report.not_prime_known)
        fail(ErrorCode::contradiction_detected,
             "prime and not-prime both derived; this is a bug");

    report.rank_bound =
        binomial(report.n + report.k - 1, report.k) - report.n + 1;
    report.irreducible_from = report.pmd_upper + 1;
    report.irreducible_to = report.rank_bound - 1; // C(n+k-1,k) - n
    return report;
}

namespace {

void append_generator_terms(std::ostringstream& out, const Edge& e, int d,
                            const std::string& sep) {
    for (int j = 1; j <= d; ++j) {
        if (j > 1) out << "+";
        bool first = true;
        for (int v : e) {
            if (!first) out << "*";
            out << "y" << sep << v << sep << j;
            first = false;
        }
    }
}

std::string macaulay2_script(const Hypergraph& h, int d, long long p) {
    std::ostringstream out;
    out << "-- pmdcert ideal export (Macaulay2)\n";
    out << "-- n=" << h.vertex_count() << " edges=" << h.edge_count()
        << " d=" << d << " char=" << p << "\n";
    out << "R = " << (p == 0 ? std::string("QQ") : "ZZ/" + std::to_string(p))
        << "[";
    bool first = true;
    for (int i = 1; i <= h.vertex_count(); ++i) {
        for (int j = 1; j <= d; ++j) {
            if (!first) out << ",";
            out << "y_" << i << "_" << j;
            first = false;
        }
    }
    out << "];\n";
    out << "I = ideal(\n";
    for (std::size_t idx = 0; idx < h.edge_count(); ++idx) {
        out << "  ";
        append_generator_terms(out, h.edge(idx), d, "_");
        out << (idx + 1 < h.edge_count() ? ",\n" : "\n");
    }
    out << ");\n";
    out << "print(\"complete_intersection: \" | toString(codim I == numgens I));\n";
    out << "print(\"prime: \" | toString(isPrime I));\n";
    return out.str();
}

std::string singular_script(const Hypergraph& h, int d, long long p) {
    std::ostringstream out;
    out << "// pmdcert ideal export (Singular)\n";
    out << "// n=" << h.vertex_count() << " edges=" << h.edge_count()
        << " d=" << d << " char=" << p << "\n";
    out << "LIB \"primdec.lib\";\n";
    out << "ring R = " << p << ", (";
    bool first = true;
    for (int i = 1; i <= h.vertex_count(); ++i) {
        for (int j = 1; j <= d; ++j) {
            if (!first) out << ",";
            out << "y_" << i << "_" << j;
            first = false;
        }
    }
    out << "), dp;\n";
    out << "ideal I =\n";
    for (std::size_t idx = 0; idx < h.edge_count(); ++idx) {
        out << "  ";
        append_generator_terms(out, h.edge(idx), d, "_");
        out << (idx + 1 < h.edge_count() ? ",\n" : ";\n");
    }
    out << "int h = nvars(R) - dim(std(I));\n";
    out << "string ci; if (h == ncols(I)) { ci = \"true\"; } else { ci = \"false\"; }\n";
    out << "print(\"complete_intersection: \" + ci);\n";
    out << "list pd = primdecGTZ(I);\n";
    out << "string pr; if (size(pd) == 1 && size(reduce(pd[1][2], std(I))) == 0) "
           "{ pr = \"true\"; } else { pr = \"false\"; }\n";
    out << "print(\"prime: \" + pr);\n";
    return out.str();
}

} // namespace

std::string emit_cas_script(const Hypergraph& h, int d, CasDialect dialect,
                            long long characteristic) {
    if (!h.uniform_k())
        fail(ErrorCode::not_uniform,
             "CAS export requires a k-uniform hypergraph");
    if (d < 1) fail(ErrorCode::invalid_d, "need d >= 1, got " + std::to_string(d));
    if (characteristic < 0)
        fail(ErrorCode::invalid_argument, "characteristic must be >= 0");
    if (h.edge_count() == 0)
        fail(ErrorCode::no_edges, "nothing to export for an edgeless hypergraph");
    switch (dialect) {
        case CasDialect::macaulay2:
            return macaulay2_script(h, d, characteristic);
        case CasDialect::singular:
            return singular_script(h, d, characteristic);
    }
    fail(ErrorCode::invalid_argument, "unknown CAS dialect");
}

} // namespace pmd

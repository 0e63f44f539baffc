// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#include "pmdcert/positive_matching.hpp"

#include <algorithm>

#include "pmdcert/error.hpp"
#include "pmdcert/simplex.hpp"

namespace pmd {

Rational WeightCertificate::edge_weight(const Edge& e) const {
    Rational sum = 0;
    for (int v : e) {
        if (v < 1 || static_cast<std::size_t>(v) > weights.size())
            fail(ErrorCode::shape_mismatch,
                 "certificate has no weight for vertex " + std::to_string(v));
        sum += weights[static_cast<std::size_t>(v) - 1];
    }
    return sum;
}

LinearSystem induced_system(const Hypergraph& h,
                            const std::vector<std::size_t>& active,
                            const std::vector<std::size_t>& matching) {
    LinearSystem sys;
    sys.num_vars = h.vertex_count();
    sys.rows.reserve(active.size());
    std::vector<char> in_matching(h.edge_count(), 0);
    for (std::size_t idx : matching) {
        h.edge(idx);
        in_matching[idx] = 1;
    }
    for (std::size_t idx : active) {
        LinearRow row;
        for (int v : h.edge(idx)) row.terms.push_back({v - 1, Rational(1)});
        row.rel = in_matching[idx] ? Relation::greater : Relation::less;
        row.rhs = 0;
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::size_t> all_edges(const Hypergraph& h) {
    std::vector<std::size_t> idx(h.edge_count());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return idx;
}

} // namespace

PositivityVerdict certify_positive_in(const Hypergraph& h,
                                      const std::vector<std::size_t>& active,
                                      const std::vector<std::size_t>& matching) {
    PositivityVerdict verdict;
    verdict.matching = sorted_unique(matching);
    verdict.rows = sorted_unique(active);
    for (std::size_t idx : verdict.matching) {
        if (!std::binary_search(verdict.rows.begin(), verdict.rows.end(), idx))
            fail(ErrorCode::index_out_of_range,
                 "matching edge " + std::to_string(idx) +
                     " is not part of the certified edge set");
    }

    const MatchingCheck mc = check_matching(h, verdict.matching);
    if (!mc.is_matching) {
        verdict.kind = PositivityVerdict::Kind::not_a_matching;
        verdict.overlap = mc.overlap;
        return verdict;
    }

    const LinearSystem sys = induced_system(h, verdict.rows, verdict.matching);
    FeasibilityVerdict lp = solve(sys);
    if (lp.feasible) {
        verdict.kind = PositivityVerdict::Kind::positive;
        verdict.certificate = WeightCertificate{std::move(lp.point)};
    } else {
        verdict.kind = PositivityVerdict::Kind::not_positive;
        verdict.farkas = std::move(lp.multipliers);
    }
    return verdict;
}

PositivityVerdict certify_positive(const Hypergraph& h,
                                   const std::vector<std::size_t>& matching) {
    return certify_positive_in(h, all_edges(h), matching);
}

bool verify_verdict(const Hypergraph& h, const PositivityVerdict& verdict) {
    switch (verdict.kind) {
        case PositivityVerdict::Kind::not_a_matching: {
            if (!verdict.overlap) return false;
            const auto& w = *verdict.overlap;
            const bool listed =
                std::binary_search(verdict.matching.begin(),
                                   verdict.matching.end(), w.edge_a) &&
                std::binary_search(verdict.matching.begin(),
                                   verdict.matching.end(), w.edge_b);
            if (!listed || w.edge_a == w.edge_b) return false;
            const Edge& a = h.edge(w.edge_a);
            const Edge& b = h.edge(w.edge_b);
            return std::binary_search(a.begin(), a.end(), w.shared_vertex) &&
                   std::binary_search(b.begin(), b.end(), w.shared_vertex);
        }
        case PositivityVerdict::Kind::positive: {
            if (!verdict.certificate) return false;
            FeasibilityVerdict lp;
            lp.feasible = true;
            lp.point = verdict.certificate->weights;
            return verify(induced_system(h, verdict.rows, verdict.matching), lp);
        }
        case PositivityVerdict::Kind::not_positive: {
            FeasibilityVerdict lp;
            lp.feasible = false;
            lp.multipliers = verdict.farkas;
            return verify(induced_system(h, verdict.rows, verdict.matching), lp);
        }
    }
    return false;
}

GreedyResult greedy_positive_matching_in(const Hypergraph& h,
                                         const std::vector<std::size_t>& active) {
    const auto edges = sorted_unique(active);
    if (edges.empty()) fail(ErrorCode::no_edges, "no active edges");

    std::vector<std::size_t> matching;
    std::optional<WeightCertificate> certificate;
    // Sweep in canonical order until a full pass adds nothing; a later
    // sweep can pick up an edge whose earlier rejection depended on a
    // smaller matching.
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t idx : edges) {
            if (std::binary_search(matching.begin(), matching.end(), idx))
                continue;
            std::vector<std::size_t> candidate = matching;
            candidate.insert(
                std::lower_bound(candidate.begin(), candidate.end(), idx), idx);
            PositivityVerdict verdict = certify_positive_in(h, edges, candidate);
            if (verdict.kind == PositivityVerdict::Kind::positive) {
                matching = std::move(candidate);
                certificate = std::move(verdict.certificate);
                grew = true;
            }
        }
    }
    if (!certificate)
        fail(ErrorCode::internal_error,
             "greedy found no positive edge; singletons are always positive "
             "in a clutter");
    return GreedyResult{std::move(matching), std::move(*certificate)};
}

GreedyResult greedy_positive_matching(const Hypergraph& h) {
    return greedy_positive_matching_in(h, all_edges(h));
}

} // namespace pmd

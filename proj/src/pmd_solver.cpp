// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#include "pmdcert/pmd_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>

#include "pmdcert/error.hpp"

namespace pmd {

namespace {

bool edges_intersect(const Edge& a, const Edge& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        (*ia < *ib) ? ++ia : ++ib;
    }
    return false;
}

int max_degree_in(const Hypergraph& h, const std::vector<std::size_t>& subset) {
    std::map<int, int> deg;
    int best = 0;
    for (std::size_t idx : subset)
        for (int v : h.edge(idx)) best = std::max(best, ++deg[v]);
    return best;
}

std::map<int, int> degrees_in(const Hypergraph& h,
                              const std::vector<std::size_t>& subset) {
    std::map<int, int> deg;
    for (std::size_t idx : subset)
        for (int v : h.edge(idx)) ++deg[v];
    return deg;
}

// Connected components of the sub-hypergraph spanned by `subset`, as sorted
// original edge-index lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> component_edge_sets(
    const Hypergraph& h, const std::vector<std::size_t>& subset) {
    std::map<int, std::vector<std::size_t>> by_vertex;
    for (std::size_t idx : subset)
        for (int v : h.edge(idx)) by_vertex[v].push_back(idx);

    std::set<std::size_t> unvisited(subset.begin(), subset.end());
    std::vector<std::vector<std::size_t>> components;
    while (!unvisited.empty()) {
        std::vector<std::size_t> stack{*unvisited.begin()};
        unvisited.erase(unvisited.begin());
        std::vector<std::size_t> comp;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            comp.push_back(cur);
            for (int v : h.edge(cur)) {
                for (std::size_t other : by_vertex[v]) {
                    auto it = unvisited.find(other);
                    if (it != unvisited.end()) {
                        unvisited.erase(it);
                        stack.push_back(other);
                    }
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    std::sort(components.begin(), components.end());
    return components;
}

std::vector<std::size_t> subtract(const std::vector<std::size_t>& from,
                                  const std::vector<std::size_t>& what) {
    std::vector<std::size_t> out;
    std::set_difference(from.begin(), from.end(), what.begin(), what.end(),
                        std::back_inserter(out));
    return out;
}

// --- the tree peeling construction ------------------------------------

// Weight bookkeeping: a vertex is tagged once, at the first level where a
// matching or boundary edge covers it.
struct VertexTag {
    int level = 0;
    bool in_matching = false;
};

struct CoveringMatching {
    std::vector<std::size_t> matching; // sorted
    std::map<int, VertexTag> tags;     // every component vertex
};

// One round of the leaf-rooted construction on a connected component with
// max degree >= 2: grows the matching one star layer at a time, keeping a
// boundary of edges that already touch it, and validates the structural
// invariants as it goes.
CoveringMatching build_covering_matching(const Hypergraph& h,
                                         const std::vector<std::size_t>& comp) {
    const auto violation = [&](const std::string& what) {
        fail(ErrorCode::star_decomposition_violation,
             what + " (component of " + std::to_string(comp.size()) +
                 " edges)");
    };

    const auto deg = degrees_in(h, comp);
    int leaf = 0;
    for (const auto& [v, d] : deg) {
        if (d == 1) {
            leaf = v;
            break;
        }
    }
    if (leaf == 0) violation("tree component without a degree-1 vertex");

    std::size_t leaf_edge = comp.size();
    for (std::size_t idx : comp) {
        const Edge& e = h.edge(idx);
        if (std::binary_search(e.begin(), e.end(), leaf)) {
            leaf_edge = idx;
            break;
        }
    }

    std::set<std::size_t> in_matching{leaf_edge};
    std::set<std::size_t> in_boundary;
    std::set<int> matched_vertices;
    std::set<int> boundary_vertices;
    std::map<int, VertexTag> tags;
    const auto tag = [&](int v, int level, bool matched) {
        tags.emplace(v, VertexTag{level, matched});
    };

    for (int v : h.edge(leaf_edge)) {
        matched_vertices.insert(v);
        tag(v, 1, true);
    }
    for (std::size_t idx : comp) {
        if (in_matching.count(idx)) continue;
        if (edges_intersect(h.edge(idx), h.edge(leaf_edge))) {
            in_boundary.insert(idx);
            for (int v : h.edge(idx)) {
                boundary_vertices.insert(v);
                tag(v, 1, false);
            }
        }
    }

    int level = 1;
    while (in_matching.size() + in_boundary.size() < comp.size()) {
        // Frontier: uncovered edges meeting the boundary.
        std::vector<std::size_t> frontier;
        for (std::size_t idx : comp) {
            if (in_matching.count(idx) || in_boundary.count(idx)) continue;
            for (std::size_t boundary_idx : in_boundary) {
                if (edges_intersect(h.edge(idx), h.edge(boundary_idx))) {
                    frontier.push_back(idx);
                    break;
                }
            }
        }
        if (frontier.empty())
            violation("frontier is empty but edges remain uncovered");

        // The frontier must split into vertex-disjoint stars, each centered
        // on a boundary vertex that is not yet matched.
        std::map<int, std::vector<std::size_t>> stars;
        for (std::size_t idx : frontier) {
            std::vector<int> apexes;
            for (int v : h.edge(idx))
                if (boundary_vertices.count(v) && !matched_vertices.count(v)) apexes.push_back(v);
            if (apexes.size() != 1)
                violation("frontier edge " + edge_to_string(h.edge(idx)) +
                          " has " + std::to_string(apexes.size()) +
                          " apex vertices");
            stars[apexes.front()].push_back(idx);
        }
        for (auto it = stars.begin(); it != stars.end(); ++it) {
            const auto& [apex, edges] = *it;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                for (std::size_t j = i + 1; j < edges.size(); ++j) {
                    const Edge& a = h.edge(edges[i]);
                    const Edge& b = h.edge(edges[j]);
                    int shared = 0;
                    for (int v : a)
                        if (std::binary_search(b.begin(), b.end(), v)) {
                            ++shared;
                            if (v != apex) shared = 2;
                        }
                    if (shared != 1)
                        violation("star edges meet outside their apex");
                }
            }
            for (auto jt = std::next(it); jt != stars.end(); ++jt) {
                for (std::size_t a : edges)
                    for (std::size_t b : jt->second)
                        if (edges_intersect(h.edge(a), h.edge(b)))
                            violation("stars are not vertex-disjoint");
            }
        }

        // One edge per star; the lexicographically smallest edge is the
        // smallest index because the edge list is canonical.
        std::vector<std::size_t> chosen;
        for (auto& [apex, edges] : stars)
            chosen.push_back(*std::min_element(edges.begin(), edges.end()));
        std::sort(chosen.begin(), chosen.end());
        chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

        for (std::size_t idx : chosen) {
            in_matching.insert(idx);
            for (int v : h.edge(idx)) {
                matched_vertices.insert(v);
                tag(v, level + 1, true);
            }
        }
        // The boundary grows by the unchosen frontier edges and everything
        // newly touching the matching.
        for (std::size_t idx : frontier) {
            if (in_matching.count(idx)) continue;
            in_boundary.insert(idx);
            for (int v : h.edge(idx)) {
                boundary_vertices.insert(v);
                tag(v, level + 1, false);
            }
        }
        for (std::size_t idx : comp) {
            if (in_matching.count(idx) || in_boundary.count(idx)) continue;
            bool touches = false;
            for (std::size_t m_idx : chosen) {
                if (edges_intersect(h.edge(idx), h.edge(m_idx))) {
                    touches = true;
                    break;
                }
            }
            if (touches) {
                in_boundary.insert(idx);
                for (int v : h.edge(idx)) {
                    boundary_vertices.insert(v);
                    tag(v, level + 1, false);
                }
            }
        }

        // Sync invariant: the boundary is exactly the set of non-matching
        // edges meeting a matched vertex.
        for (std::size_t idx : comp) {
            bool meets_m = false;
            for (int v : h.edge(idx))
                if (matched_vertices.count(v)) {
                    meets_m = true;
                    break;
                }
            const bool should = !in_matching.count(idx) && meets_m;
            if (should != (in_boundary.count(idx) > 0))
                violation("boundary bookkeeping out of sync");
        }
        ++level;
    }

    // Exit invariants: the chosen edges form a matching, matching and
    // boundary partition the component, and every vertex of degree >= 2 is
    // covered.
    std::vector<std::size_t> matching(in_matching.begin(), in_matching.end());
    if (!check_matching(h, matching).is_matching)
        violation("chosen edges are not a matching");
    for (std::size_t idx : comp)
        if (in_matching.count(idx) + in_boundary.count(idx) != 1)
            violation("matching and boundary do not partition the component");
    for (const auto& [v, d] : deg)
        if (d >= 2 && !matched_vertices.count(v))
            violation("vertex " + std::to_string(v) +
                      " of degree >= 2 is not covered");

    return CoveringMatching{std::move(matching), std::move(tags)};
}

// Construction weights: +1 on matched vertices, -1 elsewhere, by first
// coverage.  Sound for k >= 3; for k = 2 a matching edge can pick up
// +1 - 1 = 0, so levels enter the weights instead: +(2i - 1) for matched
// and -2i for boundary vertices first covered at level i, which keeps
// every matching edge positive and every other edge negative for all
// k >= 2.
Rational construction_weight(const VertexTag& t, int k) {
    if (k >= 3) return t.in_matching ? Rational(1) : Rational(-1);
    return t.in_matching ? Rational(2 * t.level - 1) : Rational(-2 * t.level);
}

bool part_certificate_ok(const Hypergraph& h,
                         const std::vector<std::size_t>& residual,
                         const std::vector<std::size_t>& part,
                         const WeightCertificate& cert) {
    for (std::size_t idx : residual) {
        const int s = sign(cert.edge_weight(h.edge(idx)));
        const bool in_part =
            std::binary_search(part.begin(), part.end(), idx);
        if (in_part ? s <= 0 : s >= 0) return false;
    }
    return true;
}

} // namespace

bool verify_decomposition(const Hypergraph& h, const PmdDecomposition& d) {
    if (d.parts.size() != d.certificates.size()) return false;
    std::vector<std::size_t> residual(h.edge_count());
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = i;

    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const auto& part = d.parts[i];
        if (part.empty()) return false;
        for (std::size_t idx : part)
            if (!std::binary_search(residual.begin(), residual.end(), idx))
                return false;
        if (!check_matching(h, part).is_matching) return false;
        if (d.certificates[i].weights.size() !=
            static_cast<std::size_t>(h.vertex_count()))
            return false;
        if (!part_certificate_ok(h, residual, part, d.certificates[i]))
            return false;
        residual = subtract(residual, part);
    }
    return residual.empty();
}

PmdDecomposition pmd_tree(const Hypergraph& h) {
    if (h.edge_count() == 0)
        fail(ErrorCode::no_edges, "cannot decompose an edgeless hypergraph");
    const TreeCheckResult tc = check_tree(h);
    if (!tc.is_tree)
        fail(ErrorCode::not_a_tree,
             "tree decomposition requires a k-uniform tree");
    const int k = tc.k;

    PmdDecomposition result;
    result.mode = "tree";

    std::vector<std::size_t> residual(h.edge_count());
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = i;

    while (!residual.empty()) {
        std::vector<std::size_t> part;
        std::vector<Rational> weights(
            static_cast<std::size_t>(h.vertex_count()), Rational(-1));

        for (const auto& comp : component_edge_sets(h, residual)) {
            if (max_degree_in(h, comp) <= 1) {
                // The component is itself a matching: emit it whole, all
                // vertices weighted +1.
                for (std::size_t idx : comp) {
                    part.push_back(idx);
                    for (int v : h.edge(idx))
                        weights[static_cast<std::size_t>(v) - 1] = 1;
                }
            } else {
                CoveringMatching cm = build_covering_matching(h, comp);
                part.insert(part.end(), cm.matching.begin(), cm.matching.end());
                for (const auto& [v, t] : cm.tags)
                    weights[static_cast<std::size_t>(v) - 1] =
                        construction_weight(t, k);
            }
        }
        std::sort(part.begin(), part.end());

        WeightCertificate cert{std::move(weights)};
        if (!part_certificate_ok(h, residual, part, cert)) {
            result.used_lp_fallback = true;
            PositivityVerdict verdict = certify_positive_in(h, residual, part);
            if (verdict.kind != PositivityVerdict::Kind::positive)
                fail(ErrorCode::star_decomposition_violation,
                     "constructed part is not positive in its residual");
            cert = *verdict.certificate;
        }
        result.parts.push_back(part);
        result.certificates.push_back(std::move(cert));
        residual = subtract(residual, part);
    }

    if (static_cast<int>(result.parts.size()) != h.max_degree())
        fail(ErrorCode::internal_error,
             "tree decomposition produced " +
                 std::to_string(result.parts.size()) + " parts, expected " +
                 std::to_string(h.max_degree()));
    return result;
}

PmdDecomposition pmd_greedy(const Hypergraph& h) {
    if (h.edge_count() == 0)
        fail(ErrorCode::no_edges, "cannot decompose an edgeless hypergraph");
    PmdDecomposition result;
    result.mode = "greedy";
    std::vector<std::size_t> residual(h.edge_count());
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = i;
    while (!residual.empty()) {
        GreedyResult strip = greedy_positive_matching_in(h, residual);
        residual = subtract(residual, strip.matching);
        result.parts.push_back(std::move(strip.matching));
        result.certificates.push_back(std::move(strip.certificate));
    }
    return result;
}

PmdBounds pmd_bounds(const Hypergraph& h) {
    if (h.edge_count() == 0)
        fail(ErrorCode::no_edges, "bounds require at least one edge");
    PmdBounds bounds;
    bounds.lower = h.max_degree();
    if (check_tree(h).is_tree)
        bounds.upper = static_cast<int>(pmd_tree(h).parts.size());
    else
        bounds.upper = static_cast<int>(pmd_greedy(h).parts.size());
    return bounds;
}

namespace {

using EdgeMask = std::uint64_t;

struct ExactSearch {
    const Hypergraph& h;
    std::uint64_t max_nodes = 0;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    int best = 0;
    std::vector<std::pair<std::vector<std::size_t>, WeightCertificate>> chain;
    std::vector<std::pair<std::vector<std::size_t>, WeightCertificate>>
        best_chain;
    bool improved = false;
    std::unordered_map<EdgeMask, int> seen_depth;

    std::vector<std::size_t> indices(EdgeMask mask) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < h.edge_count(); ++i)
            if (mask >> i & 1) out.push_back(i);
        return out;
    }

    int delta(EdgeMask mask) const {
        return max_degree_in(h, indices(mask));
    }

    // All nonempty matchings inside `active`, largest first; positivity is
    // checked lazily by the caller.
    std::vector<std::vector<std::size_t>> matchings(
        const std::vector<std::size_t>& active) const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> current;
        std::vector<char> occupied(
            static_cast<std::size_t>(h.vertex_count()) + 1, 0);
        const auto fits = [&](std::size_t idx) {
            for (int v : h.edge(idx))
                if (occupied[static_cast<std::size_t>(v)]) return false;
            return true;
        };
        auto recurse = [&](auto&& self, std::size_t from) -> void {
            if (!current.empty()) out.push_back(current);
            for (std::size_t pos = from; pos < active.size(); ++pos) {
                const std::size_t idx = active[pos];
                if (!fits(idx)) continue;
                for (int v : h.edge(idx))
                    occupied[static_cast<std::size_t>(v)] = 1;
                current.push_back(idx);
                self(self, pos + 1);
                current.pop_back();
                for (int v : h.edge(idx))
                    occupied[static_cast<std::size_t>(v)] = 0;
            }
        };
        recurse(recurse, 0);
        std::stable_sort(out.begin(), out.end(),
                         [](const auto& a, const auto& b) {
                             return a.size() > b.size();
                         });
        return out;
    }

    void dfs(EdgeMask mask, int depth) {
        if (mask == 0) {
            if (depth < best) {
                best = depth;
                best_chain = chain;
                improved = true;
            }
            return;
        }
        if (exhausted) return;
        if (nodes >= max_nodes) {
            exhausted = true;
            return;
        }
        ++nodes;

        const auto active = indices(mask);
        if (depth + max_degree_in(h, active) >= best) return;
        auto [it, inserted] = seen_depth.try_emplace(mask, depth);
        if (!inserted) {
            if (it->second <= depth) return;
            it->second = depth;
        }

        for (const auto& part : matchings(active)) {
            EdgeMask child = mask;
            for (std::size_t idx : part) child &= ~(EdgeMask(1) << idx);
            if (child == 0) {
                if (depth + 1 >= best) continue;
            } else if (depth + 1 + delta(child) >= best) {
                continue;
            }
            // Certifications dominate the work, so they count against the
            // budget as well.
            if (nodes >= max_nodes) {
                exhausted = true;
                return;
            }
            ++nodes;
            PositivityVerdict verdict = certify_positive_in(h, active, part);
            if (verdict.kind != PositivityVerdict::Kind::positive) continue;
            chain.emplace_back(part, std::move(*verdict.certificate));
            dfs(child, depth + 1);
            chain.pop_back();
            if (exhausted) return;
        }
    }
};

} // namespace

ExactResult pmd_exact(const Hypergraph& h, const SearchBudget& budget) {
    if (h.edge_count() == 0)
        fail(ErrorCode::no_edges, "exact search requires at least one edge");

    ExactResult result;
    result.bounds.lower = h.max_degree();

    PmdDecomposition warm =
        check_tree(h).is_tree ? pmd_tree(h) : pmd_greedy(h);
    result.decomposition = warm;
    result.bounds.upper = static_cast<int>(warm.parts.size());

    if (h.edge_count() > 64) {
        result.budget_exhausted = true;
        return result;
    }

    ExactSearch search{h, budget.max_nodes};
    search.best = static_cast<int>(warm.parts.size());
    const EdgeMask full = h.edge_count() == 64
                              ? ~EdgeMask(0)
                              : (EdgeMask(1) << h.edge_count()) - 1;
    search.dfs(full, 0);

    result.nodes_expanded = search.nodes;
    result.budget_exhausted = search.exhausted;
    if (search.improved) {
        PmdDecomposition found;
        found.mode = "exact";
        for (auto& [part, cert] : search.best_chain) {
            found.parts.push_back(part);
            found.certificates.push_back(cert);
        }
        result.decomposition = std::move(found);
    }
    result.bounds.upper = search.best;
    if (!search.exhausted) {
        result.value = search.best;
        result.bounds.exact = search.best;
        // The warm decomposition is the proven-optimal witness when the
        // search finished without beating it.
        result.decomposition.mode = "exact";
    }
    return result;
}

} // namespace pmd

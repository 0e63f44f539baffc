// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#include "pmdcert/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pmdcert/error.hpp"

namespace pmd {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::vertex_out_of_range: return "vertex_out_of_range";
        case ErrorCode::empty_edge: return "empty_edge";
        case ErrorCode::clutter_violation: return "clutter_violation";
        case ErrorCode::duplicate_edge: return "duplicate_edge";
        case ErrorCode::index_out_of_range: return "index_out_of_range";
        case ErrorCode::not_uniform: return "not_uniform";
        case ErrorCode::not_a_tree: return "not_a_tree";
        case ErrorCode::no_edges: return "no_edges";
        case ErrorCode::pivot_isolated: return "pivot_isolated";
        case ErrorCode::t_out_of_range: return "t_out_of_range";
        case ErrorCode::n_too_small: return "n_too_small";
        case ErrorCode::invalid_d: return "invalid_d";
        case ErrorCode::shape_mismatch: return "shape_mismatch";
        case ErrorCode::not_homogeneous_strict: return "not_homogeneous_strict";
        case ErrorCode::star_decomposition_violation:
            return "star_decomposition_violation";
        case ErrorCode::contradiction_detected: return "contradiction_detected";
        case ErrorCode::internal_error: return "internal_error";
    }
    return "unknown";
}

std::string edge_to_string(const Edge& e) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out << ',';
        out << e[i];
    }
    out << '}';
    return out.str();
}

namespace {

bool is_subset(const Edge& a, const Edge& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool edges_intersect(const Edge& a, const Edge& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return true;
        (*ia < *ib) ? ++ia : ++ib;
    }
    return false;
}

int intersection_size(const Edge& a, const Edge& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) {
            ++count;
            ++ia;
            ++ib;
        } else {
            (*ia < *ib) ? ++ia : ++ib;
        }
    }
    return count;
}

bool contains_vertex(const Edge& e, int v) {
    return std::binary_search(e.begin(), e.end(), v);
}

} // namespace

Hypergraph Hypergraph::validate(int vertex_count,
                                const std::vector<std::vector<int>>& raw_edges) {
    if (vertex_count < 1)
        fail(ErrorCode::vertex_out_of_range,
             "vertex count must be at least 1, got " +
                 std::to_string(vertex_count));

    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& raw : raw_edges) {
        if (raw.empty()) fail(ErrorCode::empty_edge, "edge must be nonempty");
        Edge e(raw);
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (int v : e) {
            if (v < 1 || v > vertex_count)
                fail(ErrorCode::vertex_out_of_range,
                     "vertex " + std::to_string(v) + " outside 1.." +
                         std::to_string(vertex_count) + " in edge " +
                         edge_to_string(e));
        }
        edges.push_back(std::move(e));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1])
            fail(ErrorCode::duplicate_edge,
                 "duplicate edge " + edge_to_string(edges[i]));
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j) continue;
            if (edges[i].size() < edges[j].size() &&
                is_subset(edges[i], edges[j]))
                fail(ErrorCode::clutter_violation,
                     edge_to_string(edges[i]) + " is contained in " +
                         edge_to_string(edges[j]));
        }
    }
    return Hypergraph(vertex_count, std::move(edges));
}

const Edge& Hypergraph::edge(std::size_t index) const {
    if (index >= edges_.size())
        fail(ErrorCode::index_out_of_range,
             "edge index " + std::to_string(index) + " out of range (have " +
                 std::to_string(edges_.size()) + " edges)");
    return edges_[index];
}

int Hypergraph::degree(int vertex) const {
    if (vertex < 1 || vertex > n_)
        fail(ErrorCode::vertex_out_of_range,
             "vertex " + std::to_string(vertex) + " outside 1.." +
                 std::to_string(n_));
    int count = 0;
    for (const auto& e : edges_)
        if (contains_vertex(e, vertex)) ++count;
    return count;
}

int Hypergraph::max_degree() const {
    std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
    int best = 0;
    for (const auto& e : edges_)
        for (int v : e) best = std::max(best, ++deg[v]);
    return best;
}

std::optional<int> Hypergraph::uniform_k() const {
    if (edges_.empty()) return std::nullopt;
    const std::size_t k = edges_.front().size();
    for (const auto& e : edges_)
        if (e.size() != k) return std::nullopt;
    return static_cast<int>(k);
}

std::vector<int> Hypergraph::isolated_vertices() const {
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_)
        for (int v : e) seen[v] = 1;
    std::vector<int> isolated;
    for (int v = 1; v <= n_; ++v)
        if (!seen[v]) isolated.push_back(v);
    return isolated;
}

MatchingCheck check_matching(const Hypergraph& h,
                             const std::vector<std::size_t>& edge_indices) {
    for (std::size_t idx : edge_indices) h.edge(idx); // range check
    for (std::size_t i = 0; i < edge_indices.size(); ++i) {
        for (std::size_t j = i + 1; j < edge_indices.size(); ++j) {
            const Edge& a = h.edge(edge_indices[i]);
            const Edge& b = h.edge(edge_indices[j]);
            for (int v : a) {
                if (contains_vertex(b, v))
                    return {false,
                            OverlapWitness{edge_indices[i], edge_indices[j], v}};
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

// Enumerates the (T2) sequences joining v to v', stopping at the second
// one.  A sequence may only touch v in its first edge and v' in its last.
class SequenceEnumerator {
public:
    SequenceEnumerator(const Hypergraph& h, int v, int vprime)
        : h_(h), v_(v), vprime_(vprime) {}

    // Collects up to two sequences into `found`.
    void run(std::vector<std::vector<std::size_t>>& found) {
        found_ = &found;
        for (std::size_t i = 0; i < h_.edge_count() && found_->size() < 2; ++i) {
            const Edge& e = h_.edge(i);
            if (!contains_vertex(e, v_)) continue;
            stack_.push_back(i);
            if (contains_vertex(e, vprime_))
                found_->push_back(stack_);
            else
                extend();
            stack_.pop_back();
        }
    }

private:
    void extend() {
        if (found_->size() >= 2) return;
        const Edge& last = h_.edge(stack_.back());
        for (std::size_t i = 0; i < h_.edge_count(); ++i) {
            if (found_->size() >= 2) return;
            const Edge& e = h_.edge(i);
            if (contains_vertex(e, v_)) continue;
            if (intersection_size(e, last) != 1) continue;
            bool clash = false;
            for (std::size_t s = 0; s + 1 < stack_.size(); ++s) {
                if (edges_intersect(e, h_.edge(stack_[s]))) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            stack_.push_back(i);
            if (contains_vertex(e, vprime_))
                found_->push_back(stack_);
            else
                extend();
            stack_.pop_back();
        }
    }

    const Hypergraph& h_;
    int v_;
    int vprime_;
    std::vector<std::size_t> stack_;
    std::vector<std::vector<std::size_t>>* found_ = nullptr;
};

} // namespace

TreeCheckResult check_tree(const Hypergraph& h) {
    TreeCheckResult result;
    result.isolated = h.isolated_vertices();

    const auto k = h.uniform_k();
    if (!k || *k < 2) {
        result.is_k_uniform = false;
        result.k = k.value_or(0);
        result.is_tree = false;
        result.violation = TreeViolation{};
        return result;
    }
    result.is_k_uniform = true;
    result.k = *k;

    // (T1)
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        for (std::size_t j = i + 1; j < h.edge_count(); ++j) {
            if (intersection_size(h.edge(i), h.edge(j)) >= 2) {
                TreeViolation violation;
                violation.kind = TreeViolation::Kind::edge_overlap;
                violation.edge_a = i;
                violation.edge_b = j;
                result.violation = violation;
                result.is_tree = false;
                return result;
            }
        }
    }

    // (T2) by exhaustive sequence enumeration per vertex pair.
    for (int v = 1; v <= h.vertex_count(); ++v) {
        for (int vp = v + 1; vp <= h.vertex_count(); ++vp) {
            std::vector<std::vector<std::size_t>> sequences;
            SequenceEnumerator(h, v, vp).run(sequences);
            if (sequences.size() != 1) {
                TreeViolation violation;
                violation.kind = TreeViolation::Kind::sequence_count;
                violation.vertex_a = v;
                violation.vertex_b = vp;
                violation.sequences = sequences;
                result.violation = violation;
                result.is_tree = false;
                return result;
            }
        }
    }

    result.is_tree = true;
    return result;
}

int find_leaf(const Hypergraph& h) {
    if (h.edge_count() == 0) fail(ErrorCode::no_edges, "hypergraph has no edges");
    if (!check_tree(h).is_tree)
        fail(ErrorCode::not_a_tree, "find_leaf requires a k-uniform tree");
    for (int v = 1; v <= h.vertex_count(); ++v)
        if (h.degree(v) == 1) return v;
    fail(ErrorCode::internal_error, "tree without a degree-1 vertex");
}

Hypergraph delete_edges(const Hypergraph& h,
                        const std::vector<std::size_t>& edge_indices) {
    std::set<std::size_t> removed;
    for (std::size_t idx : edge_indices) {
        h.edge(idx);
        removed.insert(idx);
    }
    std::vector<std::vector<int>> kept;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (!removed.count(i)) kept.push_back(h.edge(i));
    return Hypergraph::validate(h.vertex_count(), kept);
}

std::vector<SubHypergraph> connected_components(const Hypergraph& h) {
    const std::size_t m = h.edge_count();
    std::vector<int> component(m, -1);
    int component_count = 0;

    // Union edges via shared vertices.
    std::map<int, std::vector<std::size_t>> by_vertex;
    for (std::size_t i = 0; i < m; ++i)
        for (int v : h.edge(i)) by_vertex[v].push_back(i);

    for (std::size_t start = 0; start < m; ++start) {
        if (component[start] != -1) continue;
        const int id = component_count++;
        std::vector<std::size_t> queue{start};
        component[start] = id;
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            for (int v : h.edge(cur)) {
                for (std::size_t other : by_vertex[v]) {
                    if (component[other] == -1) {
                        component[other] = id;
                        queue.push_back(other);
                    }
                }
            }
        }
    }

    std::vector<SubHypergraph> components;
    for (int id = 0; id < component_count; ++id) {
        std::vector<std::size_t> edge_map;
        std::set<int> vertices;
        for (std::size_t i = 0; i < m; ++i) {
            if (component[i] != id) continue;
            edge_map.push_back(i);
            for (int v : h.edge(i)) vertices.insert(v);
        }
        std::vector<int> vertex_map(vertices.begin(), vertices.end());
        std::map<int, int> to_local;
        for (std::size_t i = 0; i < vertex_map.size(); ++i)
            to_local[vertex_map[i]] = static_cast<int>(i) + 1;
        std::vector<std::vector<int>> local_edges;
        for (std::size_t idx : edge_map) {
            std::vector<int> local;
            for (int v : h.edge(idx)) local.push_back(to_local[v]);
            local_edges.push_back(std::move(local));
        }
        Hypergraph graph = Hypergraph::validate(
            static_cast<int>(vertex_map.size()), local_edges);
        // Relabeling is monotone, so local edge order matches the slice of
        // the parent's order and edge_map stays aligned.
        components.push_back(
            SubHypergraph{std::move(graph), std::move(vertex_map),
                          std::move(edge_map)});
    }
    return components;
}

} // namespace pmd

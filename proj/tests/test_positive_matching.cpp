#include <doctest.h>

#include <random>

#include "pmdcert/error.hpp"
#include "pmdcert/positive_matching.hpp"

#include "test_util.hpp"

using namespace pmd;
using testutil::make;

namespace {

const Hypergraph& four_cycle() {
    // Canonical edge order: 0:{1,2} 1:{1,4} 2:{2,3} 3:{3,4}.
    static const Hypergraph h = make(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    return h;
}

} // namespace

TEST_CASE("single edge of the four-cycle is positive") {
    const PositivityVerdict v = certify_positive(four_cycle(), {0});
    REQUIRE(v.kind == PositivityVerdict::Kind::positive);
    CHECK(verify_verdict(four_cycle(), v));
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->edge_weight(four_cycle().edge(0)) > 0);
    CHECK(v.certificate->edge_weight(four_cycle().edge(1)) < 0);
}

TEST_CASE("perfect matching of the four-cycle is not positive") {
    // {1,2} and {3,4} are edges 0 and 3.
    const PositivityVerdict v = certify_positive(four_cycle(), {0, 3});
    REQUIRE(v.kind == PositivityVerdict::Kind::not_positive);
    CHECK(verify_verdict(four_cycle(), v));
    CHECK(v.farkas.size() == 4);

    // The all-ones combination is the textbook witness.
    PositivityVerdict hand = v;
    hand.farkas = {Rational(1), Rational(1), Rational(1), Rational(1)};
    CHECK(verify_verdict(four_cycle(), hand));
}

TEST_CASE("empty matching is positive via all-negative weights") {
    const Hypergraph h = make(3, {{1, 2, 3}});
    const PositivityVerdict v = certify_positive(h, {});
    REQUIRE(v.kind == PositivityVerdict::Kind::positive);
    CHECK(verify_verdict(h, v));

    // The constant -1 assignment is itself a valid certificate.
    PositivityVerdict hand = v;
    hand.certificate = WeightCertificate{{Rational(-1), Rational(-1), Rational(-1)}};
    CHECK(verify_verdict(h, hand));
}

TEST_CASE("overlapping indices yield a not_a_matching verdict") {
    const Hypergraph h = make(4, {{1, 2}, {2, 3}, {3, 4}});
    const PositivityVerdict v = certify_positive(h, {0, 1});
    REQUIRE(v.kind == PositivityVerdict::Kind::not_a_matching);
    REQUIRE(v.overlap.has_value());
    CHECK(v.overlap->shared_vertex == 2);
    CHECK(verify_verdict(h, v));
    CHECK_THROWS_AS(certify_positive(h, {9}), Error);
}

TEST_CASE("singleton positivity across random clutters") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round) {
        const Hypergraph h = testutil::random_clutter(rng, 9, 9);
        CAPTURE(round);
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            const PositivityVerdict v = certify_positive(h, {e});
            CHECK(v.kind == PositivityVerdict::Kind::positive);
            CHECK(verify_verdict(h, v));
        }
    }
}

TEST_CASE("positivity certificates survive edge-set shrinking") {
    // If M is positive for (V,E), the same weights certify M for any
    // E' between M and E.
    std::mt19937_64 rng(123);
    for (int round = 0; round < 60; ++round) {
        const Hypergraph h = testutil::random_clutter(rng, 8, 8);
        const GreedyResult g = greedy_positive_matching(h);
        std::vector<std::size_t> subset = g.matching;
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            if (std::binary_search(g.matching.begin(), g.matching.end(), e))
                continue;
            if (rng() & 1) subset.push_back(e);
        }
        std::sort(subset.begin(), subset.end());
        PositivityVerdict shrunk;
        shrunk.kind = PositivityVerdict::Kind::positive;
        shrunk.matching = g.matching;
        shrunk.rows = subset;
        shrunk.certificate = g.certificate;
        CHECK(verify_verdict(h, shrunk));
    }
}

TEST_CASE("greedy on a single edge returns it") {
    const Hypergraph h = make(3, {{1, 2, 3}});
    const GreedyResult g = greedy_positive_matching(h);
    CHECK(g.matching == std::vector<std::size_t>{0});
}

TEST_CASE("greedy on the 2-uniform path picks the outer pair") {
    const Hypergraph h = make(4, {{1, 2}, {2, 3}, {3, 4}});
    const GreedyResult g = greedy_positive_matching(h);
    CHECK(g.matching == std::vector<std::size_t>{0, 2});
    CHECK(g.certificate.edge_weight(h.edge(0)) > 0);
    CHECK(g.certificate.edge_weight(h.edge(2)) > 0);
    CHECK(g.certificate.edge_weight(h.edge(1)) < 0);
}

TEST_CASE("greedy on the four-cycle stops at one edge") {
    const GreedyResult g = greedy_positive_matching(four_cycle());
    CHECK(g.matching == std::vector<std::size_t>{0});
}

TEST_CASE("greedy result cannot be extended by any single edge") {
    std::mt19937_64 rng(888);
    for (int round = 0; round < 30; ++round) {
        const Hypergraph h = testutil::random_clutter(rng, 8, 9);
        const GreedyResult g = greedy_positive_matching(h);
        CHECK_FALSE(g.matching.empty());
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            if (std::binary_search(g.matching.begin(), g.matching.end(), e))
                continue;
            std::vector<std::size_t> extended = g.matching;
            extended.push_back(e);
            std::sort(extended.begin(), extended.end());
            const PositivityVerdict v = certify_positive(h, extended);
            CHECK(v.kind != PositivityVerdict::Kind::positive);
        }
    }
}

TEST_CASE("greedy requires at least one edge") {
    CHECK_THROWS_AS(greedy_positive_matching(make(3, {})), Error);
}

TEST_CASE("every positive verdict passes is_matching by construction") {
    std::mt19937_64 rng(4096);
    for (int round = 0; round < 40; ++round) {
        const Hypergraph h = testutil::random_clutter(rng, 9, 10);
        std::vector<std::size_t> subset;
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            if (rng() % 3 == 0) subset.push_back(e);
        const PositivityVerdict v = certify_positive(h, subset);
        if (v.kind == PositivityVerdict::Kind::positive)
            CHECK(check_matching(h, v.matching).is_matching);
        CHECK(verify_verdict(h, v));
    }
}

#include <doctest.h>

#include <random>

#include "pmdcert/error.hpp"
#include "pmdcert/simplex.hpp"

#include "test_util.hpp"

using namespace pmd;

namespace {

LinearRow row(std::vector<std::pair<int, long>> terms, Relation rel, long rhs) {
    LinearRow r;
    for (auto [v, c] : terms) r.terms.push_back({v, Rational(c)});
    r.rel = rel;
    r.rhs = rhs;
    return r;
}

// w1+w2 > 0, w3+w4 > 0, w2+w3 < 0, w1+w4 < 0: summing the oriented rows
// cancels every variable, so the system is infeasible.
LinearSystem four_cycle_system() {
    LinearSystem sys;
    sys.num_vars = 4;
    sys.rows.push_back(row({{0, 1}, {1, 1}}, Relation::greater, 0));
    sys.rows.push_back(row({{2, 1}, {3, 1}}, Relation::greater, 0));
    sys.rows.push_back(row({{1, 1}, {2, 1}}, Relation::less, 0));
    sys.rows.push_back(row({{0, 1}, {3, 1}}, Relation::less, 0));
    return sys;
}

} // namespace

TEST_CASE("open interval is strictly feasible") {
    LinearSystem sys;
    sys.num_vars = 1;
    sys.rows.push_back(row({{0, 1}}, Relation::greater, 0));
    sys.rows.push_back(row({{0, 1}}, Relation::less, 1));
    const FeasibilityVerdict v = solve(sys);
    REQUIRE(v.feasible);
    CHECK(v.point[0] > 0);
    CHECK(v.point[0] < 1);
    CHECK(verify(sys, v));
}

TEST_CASE("contradictory strict pair is infeasible") {
    LinearSystem sys;
    sys.num_vars = 1;
    sys.rows.push_back(row({{0, 1}}, Relation::greater, 0));
    sys.rows.push_back(row({{0, -1}}, Relation::greater, 0));
    const FeasibilityVerdict v = solve(sys);
    REQUIRE_FALSE(v.feasible);
    CHECK(verify(sys, v));

    // The textbook certificate (1,1) also verifies.
    FeasibilityVerdict hand;
    hand.feasible = false;
    hand.multipliers = {Rational(1), Rational(1)};
    CHECK(verify(sys, hand));
}

TEST_CASE("four-cycle system is infeasible with an all-ones certificate") {
    const LinearSystem sys = four_cycle_system();
    const FeasibilityVerdict v = solve(sys);
    REQUIRE_FALSE(v.feasible);
    CHECK(verify(sys, v));

    FeasibilityVerdict hand;
    hand.feasible = false;
    hand.multipliers = {Rational(1), Rational(1), Rational(1), Rational(1)};
    CHECK(verify(sys, hand));
}

TEST_CASE("verify rejects wrong certificates") {
    LinearSystem sys;
    sys.num_vars = 1;
    sys.rows.push_back(row({{0, 1}}, Relation::greater, 0));

    FeasibilityVerdict good;
    good.feasible = true;
    good.point = {Rational(1)};
    CHECK(verify(sys, good));

    FeasibilityVerdict boundary;
    boundary.feasible = true;
    boundary.point = {Rational(0)}; // violates the strict row
    CHECK_FALSE(verify(sys, boundary));

    FeasibilityVerdict wrong_shape;
    wrong_shape.feasible = true;
    wrong_shape.point = {Rational(1), Rational(1)};
    CHECK_THROWS_AS(verify(sys, wrong_shape), Error);

    FeasibilityVerdict negative_multiplier;
    negative_multiplier.feasible = false;
    negative_multiplier.multipliers = {Rational(-1)};
    CHECK_FALSE(verify(sys, negative_multiplier));

    FeasibilityVerdict zero;
    zero.feasible = false;
    zero.multipliers = {Rational(0)};
    CHECK_FALSE(verify(sys, zero));
}

TEST_CASE("empty system is feasible at the origin") {
    LinearSystem sys;
    sys.num_vars = 3;
    const FeasibilityVerdict v = solve(sys);
    REQUIRE(v.feasible);
    CHECK(v.point == std::vector<Rational>(3, Rational(0)));
}

TEST_CASE("constant rows") {
    LinearSystem impossible;
    impossible.num_vars = 0;
    impossible.rows.push_back(row({}, Relation::less, 0)); // 0 < 0
    const FeasibilityVerdict v = solve(impossible);
    REQUIRE_FALSE(v.feasible);
    CHECK(verify(impossible, v));

    LinearSystem fine;
    fine.num_vars = 0;
    fine.rows.push_back(row({}, Relation::less_eq, 0)); // 0 <= 0
    CHECK(solve(fine).feasible);

    LinearSystem negative;
    negative.num_vars = 2;
    negative.rows.push_back(row({}, Relation::greater_eq, 1)); // 0 >= 1
    const FeasibilityVerdict nv = solve(negative);
    REQUIRE_FALSE(nv.feasible);
    CHECK(verify(negative, nv));
}

TEST_CASE("weak-only systems run without the gap variable") {
    LinearSystem sys;
    sys.num_vars = 2;
    sys.rows.push_back(row({{0, 1}, {1, 1}}, Relation::greater_eq, 2));
    sys.rows.push_back(row({{0, 1}}, Relation::less_eq, -3));
    const FeasibilityVerdict v = solve(sys);
    REQUIRE(v.feasible);
    CHECK(verify(sys, v));
}

TEST_CASE("strict_homogeneous_normalize rewrites and preserves the verdict") {
    LinearSystem sys;
    sys.num_vars = 2;
    sys.rows.push_back(row({{0, 1}}, Relation::less, 0));
    sys.rows.push_back(row({{1, 1}}, Relation::greater, 0));
    const LinearSystem normalized = strict_homogeneous_normalize(sys);
    CHECK(normalized.rows[0].rel == Relation::less_eq);
    CHECK(normalized.rows[0].rhs == Rational(-1));
    CHECK(normalized.rows[1].rel == Relation::greater_eq);
    CHECK(normalized.rows[1].rhs == Rational(1));
    CHECK(solve(sys).feasible == solve(normalized).feasible);

    const LinearSystem cycle = four_cycle_system();
    CHECK(solve(cycle).feasible ==
          solve(strict_homogeneous_normalize(cycle)).feasible);

    LinearSystem not_strict;
    not_strict.num_vars = 1;
    not_strict.rows.push_back(row({{0, 1}}, Relation::less_eq, 0));
    CHECK_THROWS_AS(strict_homogeneous_normalize(not_strict), Error);

    LinearSystem not_homogeneous;
    not_homogeneous.num_vars = 1;
    not_homogeneous.rows.push_back(row({{0, 1}}, Relation::less, 5));
    CHECK_THROWS_AS(strict_homogeneous_normalize(not_homogeneous), Error);
}

TEST_CASE("soundness sweep: 1000 random systems verify") {
    std::mt19937_64 rng(424242);
    int feasible_count = 0;
    for (int round = 0; round < 1000; ++round) {
        const LinearSystem sys = testutil::random_system(rng, 8, 16);
        CAPTURE(round);
        const FeasibilityVerdict v = solve(sys);
        CHECK(verify(sys, v));
        feasible_count += v.feasible ? 1 : 0;
    }
    // Both outcomes must actually occur for the sweep to mean anything.
    CHECK(feasible_count > 50);
    CHECK(feasible_count < 950);
}

TEST_CASE("scaling a homogeneous strict row does not change the verdict") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num_dist(1, 5);
    std::uniform_int_distribution<int> den_dist(1, 5);
    for (int round = 0; round < 100; ++round) {
        LinearSystem sys = testutil::random_system(rng, 5, 8);
        for (auto& r : sys.rows) {
            r.rel = (rng() & 1) ? Relation::less : Relation::greater;
            r.rhs = 0;
        }
        const bool base = solve(sys).feasible;
        LinearSystem scaled = sys;
        for (auto& r : scaled.rows) {
            Rational factor(num_dist(rng), den_dist(rng));
            factor.canonicalize();
            for (auto& t : r.terms) t.coeff *= factor;
        }
        CHECK(solve(scaled).feasible == base);
        CHECK(solve(strict_homogeneous_normalize(sys)).feasible == base);
    }
}

TEST_CASE("determinism: identical inputs give identical verdicts") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 50; ++round) {
        const LinearSystem sys = testutil::random_system(rng, 6, 10);
        const FeasibilityVerdict a = solve(sys);
        const FeasibilityVerdict b = solve(sys);
        CHECK(a.feasible == b.feasible);
        CHECK(a.point == b.point);
        CHECK(a.multipliers == b.multipliers);
    }
}

TEST_CASE("system dump is human readable") {
    LinearSystem sys;
    sys.num_vars = 3;
    sys.rows.push_back(row({{0, 3}, {2, -1}}, Relation::less, 0));
    const std::string dump = to_string(sys);
    CHECK(dump.find("3*x0") != std::string::npos);
    CHECK(dump.find("x2") != std::string::npos);
    CHECK(dump.find("<") != std::string::npos);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "sidon/bch.hpp"
#include "sidon/ruzsa.hpp"
#include "sidon/set.hpp"

using namespace sidon;

TEST_CASE("compute_m picks the least even integer above the threshold") {
    CHECK(compute_m(20, 7.0) == 18);
    CHECK(compute_m(24, 7.0) == 22);
    CHECK(compute_m(8, 7.0) == 10);
    CHECK_THROWS_AS(compute_m(0, 7.0), std::invalid_argument);
    CHECK_THROWS_AS(compute_m(8, 0.0), std::invalid_argument);
}

TEST_CASE("quotient_map takes the high m bits") {
    CHECK(quotient_map(0b1101, 4, 2) == 0b11);
    CHECK(quotient_map(0b1101, 4, 4) == 0b1101);
    for (Point x = 0; x < 16; ++x) {
        CHECK(quotient_map(x, 4, 2) == x / 4);
    }
}

TEST_CASE("sample_lift with n == m reproduces the quotient set") {
    const SidonSet a = build_bch(8);
    SplitMix64 rng(99);
    const SidonSet b = sample_lift(a, 8, rng);
    CHECK(b.points == a.points);
}

TEST_CASE("sample_lift projects back to the quotient set bijectively") {
    const SidonSet a = build_bch(8);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SplitMix64 rng(seed);
        const SidonSet b = sample_lift(a, 13, rng);
        REQUIRE(b.size() == a.size());
        std::set<Point> projected;
        for (const Point p : b.points) {
            projected.insert(quotient_map(p, 13, 8));
        }
        CHECK(projected == std::set<Point>(a.points.begin(), a.points.end()));
    }
}

TEST_CASE("every lift is Sidon, 100 seeds at (n, m) = (12, 8)") {
    const SidonSet a = build_bch(8);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SplitMix64 rng(seed);
        SidonSet b = sample_lift(a, 12, rng); // asserts internally as well
        CHECK(b.certified);
    }
}

TEST_CASE("certified coset coverage of the dense sets") {
    SidonSet a6 = build_bch(6);
    CHECK(certify_coset_coverage(a6) == 1);
    SidonSet a10 = build_bch(10);
    CHECK(certify_coset_coverage(a10) == 5);
    SidonSet a18 = build_bch(18);
    CHECK(certify_coset_coverage(a18) >= coset_coverage_floor(18));
}

TEST_CASE("construct at n == m reduces to the dense set itself") {
    RuzsaParams params;
    params.n = 12;
    params.m_override = 12;
    params.seed = 5;
    const RuzsaReport report = construct_small_maximal(params);
    CHECK(report.m == 12);
    CHECK(report.size_x == 0);
    CHECK(report.size_b == 64);
    CHECK(report.size_s == 64);
    CHECK(report.attempts_used == 1);
    CHECK(report.maximal);
    CHECK(report.set.points == build_bch(12).points);
}

TEST_CASE("construct end-to-end at n = 20") {
    RuzsaParams params;
    params.n = 20;
    params.seed = 1;
    const RuzsaReport report = construct_small_maximal(params);
    CHECK(report.m == 18);
    CHECK(report.size_a == 512);
    CHECK(report.size_b == 512);
    CHECK(report.size_x <= 4);
    CHECK(report.size_s <= 516);
    CHECK(report.size_s == report.size_b + report.size_x);
    CHECK(report.maximal);
    CHECK(report.j_min >= coset_coverage_floor(18));
    CHECK(report.union_bound < 1.0);
    CHECK(report.union_bound ==
          (std::ldexp(1.0, 20) - 4.0 * 512.0) *
              std::pow(0.75, static_cast<double>(report.j_min)));

    // The returned set survives from-scratch re-verification.
    SidonSet fresh = set_from_points(report.n, report.set.points);
    REQUIRE(is_sidon(fresh));
    CHECK(is_maximal(fresh));

    // Size lower bound of any maximal set.
    CHECK(choose3(report.size_s) + report.size_s >= fresh.universe());
}

TEST_CASE("construct rejects dimensions below the asymptotic regime") {
    RuzsaParams params;
    params.n = 8;
    CHECK_THROWS_AS(construct_small_maximal(params), std::invalid_argument);
}

TEST_CASE("m override validation") {
    RuzsaParams params;
    params.n = 12;
    params.m_override = 7;
    CHECK_THROWS_AS(construct_small_maximal(params), std::invalid_argument);
    params.m_override = 2;
    CHECK_THROWS_AS(construct_small_maximal(params), std::invalid_argument);
    params.m_override = 14;
    CHECK_THROWS_AS(construct_small_maximal(params), std::invalid_argument);
}

TEST_CASE("an undersized quotient exhausts the attempt budget honestly") {
    // 560 triples cannot cover the 3840 points outside the A-cosets, so no
    // lift is ever accepted.
    RuzsaParams params;
    params.n = 12;
    params.m_override = 8;
    params.max_attempts = 8;
    CHECK_THROWS_AS(construct_small_maximal(params), ConstructionError);
}

TEST_CASE("construction is deterministic in seed and worker count") {
    RuzsaParams params;
    params.n = 20;
    params.seed = 42;
    const RuzsaReport r1 = construct_small_maximal(params, 1);
    const RuzsaReport r2 = construct_small_maximal(params, 2);
    const RuzsaReport r3 = construct_small_maximal(params, 3);
    CHECK(r1.set.points == r2.set.points);
    CHECK(r1.set.points == r3.set.points);
    CHECK(r1.attempts_used == r2.attempts_used);
    CHECK(r1.j_min == r2.j_min);
    CHECK(r1.union_bound == r2.union_bound);
    CHECK(r1.size_x == r3.size_x);

    RuzsaParams other = params;
    other.seed = 43;
    const RuzsaReport r4 = construct_small_maximal(other, 2);
    // different seed, same certificates; the set itself may move
    CHECK(r4.j_min == r1.j_min);
    CHECK(r4.maximal);
}

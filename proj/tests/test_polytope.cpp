#include "hkq/polytope.hpp"

#include <doctest.h>

using namespace hkq;

TEST_CASE("Fibonacci polytope counts") {
    CHECK(count_fibonacci(3, 2) == 14);
    for (int d = 1; d <= 6; ++d) CHECK(count_fibonacci(d, 0) == 1);
    // unit dilation counts are Fibonacci numbers
    std::vector<long> fib{2, 3, 5, 8, 13};
    for (int d = 1; d <= 5; ++d)
        CHECK(count_fibonacci(d, 1) == fib[static_cast<std::size_t>(d) - 1]);
}

TEST_CASE("extended polytope counts") {
    std::vector<long> jacobsthal{3, 5, 11, 21};  // (2^{d+2} - (-1)^d)/3
    for (int d = 1; d <= 4; ++d)
        CHECK(count_extended(d, 1) == jacobsthal[static_cast<std::size_t>(d) - 1]);
    for (long k = 0; k <= 6; ++k) CHECK(count_extended(1, k) == 2 * k + 1);
    CHECK(count_extended(2, 2) == 13);
    // degenerate conventions
    for (long k = 0; k <= 4; ++k) {
        CHECK(count_extended(0, k) == 1);
        CHECK(count_extended(-1, k) == 1);
    }
    CHECK_THROWS_AS(count_extended(-2, 1), std::invalid_argument);
}

TEST_CASE("DP counts equal direct enumeration") {
    for (int d = 1; d <= 6; ++d)
        for (long k = 0; k <= 4; ++k) {
            LatticeCountQuery fib{PolytopeFamily::Fibonacci, d, k, {}};
            CHECK(brute_force_count(fib) == count_fibonacci(d, k));
            LatticeCountQuery ext{PolytopeFamily::Extended, d, k, {}};
            CHECK(brute_force_count(ext) == count_extended(d, k));
        }
    // region patterns, all sign choices at d = 4
    for (long mask = 0; mask < 8; ++mask) {
        std::vector<Ineq> pattern;
        for (int i = 0; i < 3; ++i) pattern.push_back((mask >> i) & 1 ? Ineq::Ge : Ineq::Le);
        for (long k = 0; k <= 3; ++k) {
            LatticeCountQuery q{PolytopeFamily::Region, 4, k, pattern};
            CHECK(brute_force_count(q) == count_region(4, pattern, k));
        }
    }
}

TEST_CASE("enumeration budget is enforced") {
    LatticeCountQuery q{PolytopeFamily::Fibonacci, 10, 9, {}};
    CHECK_THROWS_AS(brute_force_count(q, 1000), std::invalid_argument);
}

TEST_CASE("region counts") {
    CHECK(count_region(2, {Ineq::Le}, 2) == 6);
    CHECK(count_region(2, {Ineq::Ge}, 2) == 6);
    for (int d = 2; d <= 5; ++d)
        for (long k = 0; k <= 4; ++k) {
            std::vector<Ineq> all_le(static_cast<std::size_t>(d) - 1, Ineq::Le);
            CHECK(count_region(d, all_le, k) == count_fibonacci(d, k));
        }
    CHECK_THROWS_AS(count_region(3, {Ineq::Le}, 1), std::invalid_argument);
}

TEST_CASE("region volumes") {
    CHECK(volume_of_region(2, {Ineq::Le}) == make_rational(1, 2));
    CHECK(volume_of_region(2, {Ineq::Ge}) == make_rational(1, 2));
    // closed regions partition the cube up to measure zero
    for (int d = 2; d <= 5; ++d) {
        Rational total(0);
        for (long mask = 0; mask < (1L << (d - 1)); ++mask) {
            std::vector<Ineq> pattern;
            for (int i = 0; i + 1 < d; ++i)
                pattern.push_back((mask >> i) & 1 ? Ineq::Ge : Ineq::Le);
            total += volume_of_region(d, pattern);
        }
        CHECK(total == 1);
    }
}

TEST_CASE("counts are polynomial of degree d in the dilation") {
    for (int d = 1; d <= 6; ++d) {
        std::vector<std::pair<Rational, Rational>> fib, ext;
        for (long k = 0; k <= d; ++k) {
            fib.emplace_back(Rational(k), Rational(count_fibonacci(d, k)));
            ext.emplace_back(Rational(k), Rational(count_extended(d, k)));
        }
        Polynomial pf = interpolate(fib), pe = interpolate(ext);
        CHECK(pf.degree() == d);
        CHECK(pe.degree() == d);
        for (long k = d + 1; k <= d + 4; ++k) {
            CHECK(pf(Rational(k)) == Rational(count_fibonacci(d, k)));
            CHECK(pe(Rational(k)) == Rational(count_extended(d, k)));
        }
    }
}

TEST_CASE("extended polytope vertex counts") {
    CHECK(extended_vertex_count(1) == 2);
    CHECK(extended_vertex_count(2) == 4);
    CHECK(extended_vertex_count(3) == 6);
    CHECK(extended_vertex_count(4) == 12);  // 2 v(2) + 2 v(1)
    CHECK(extended_vertex_count(5) == 20);
    for (int d = 1; d <= 10; ++d)
        CHECK(extended_vertex_count(d) == extended_vertex_count_by_enumeration(d));
}

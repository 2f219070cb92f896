#include "hkq/polynomial.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace hkq;

namespace {

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

}  // namespace

TEST_CASE("normalization: trailing zeros are dropped, empty is zero") {
    Polynomial p = poly({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(poly({Rational(0)}).is_zero());
}

TEST_CASE("interpolation reproduces simple polynomials") {
    Polynomial line = interpolate({{Rational(0), Rational(1)}, {Rational(1), Rational(2)}});
    CHECK(line == poly({Rational(1), Rational(1)}));  // x + 1

    Polynomial square = interpolate(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(4)}});
    CHECK(square == poly({Rational(0), Rational(0), Rational(1)}));  // x^2

    // lattice counts of the 3-dimensional Fibonacci polytope at k = 0..3
    Polynomial p3 = interpolate({{Rational(0), Rational(1)},
                                 {Rational(1), Rational(5)},
                                 {Rational(2), Rational(14)},
                                 {Rational(3), Rational(30)}});
    CHECK(p3 == poly({Rational(1), make_rational(13, 6), make_rational(3, 2),
                      make_rational(1, 3)}));
    // equals C(k+3,3) + C(k+2,3) on further integers
    for (long k = 4; k <= 12; ++k)
        CHECK(p3(Rational(k)) ==
              Rational(binomial(Integer(k + 3), 3) + binomial(Integer(k + 2), 3)));
}

TEST_CASE("interpolation rejects duplicate nodes") {
    CHECK_THROWS_WITH_AS(
        interpolate({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}}),
        "degenerate interpolation node", std::invalid_argument);
    CHECK_THROWS_AS(interpolate({}), std::invalid_argument);
}

TEST_CASE("interpolation hits every node exactly on random input") {
    testing::Rng rng;
    for (int round = 0; round < 60; ++round) {
        std::set<Rational> xs;
        while (xs.size() < 5) xs.insert(rng.rational(30, 7));
        std::vector<std::pair<Rational, Rational>> pts;
        for (const auto& x : xs) pts.emplace_back(x, rng.rational());
        Polynomial p = interpolate(pts);
        CHECK(p.degree() < static_cast<int>(pts.size()));
        for (const auto& [x, y] : pts) CHECK(p(x) == y);
    }
}

TEST_CASE("interpolation is degree-minimal") {
    testing::Rng rng;
    for (int round = 0; round < 40; ++round) {
        Polynomial p = rng.polynomial(4);
        std::vector<std::pair<Rational, Rational>> pts;
        for (long x = 0; x <= p.degree() + 2; ++x)  // one more sample than needed
            pts.emplace_back(Rational(x), p(Rational(x)));
        CHECK(interpolate(pts) == p);
    }
}

TEST_CASE("composition") {
    Polynomial x2 = poly({Rational(0), Rational(0), Rational(1)});
    Polynomial xp1 = poly({Rational(1), Rational(1)});
    CHECK(compose(x2, xp1) == poly({Rational(1), Rational(2), Rational(1)}));

    testing::Rng rng;
    for (int round = 0; round < 20; ++round) {
        Polynomial p = rng.polynomial(5);
        CHECK(compose(p, Polynomial::x()) == p);
    }

    // P_3((x-3)/2) = x(x^2-1)/24
    Polynomial p3 = poly({Rational(1), make_rational(13, 6), make_rational(3, 2),
                          make_rational(1, 3)});
    Polynomial shifted = compose(p3, poly({make_rational(-3, 2), make_rational(1, 2)}));
    CHECK(shifted == poly({Rational(0), make_rational(-1, 24), Rational(0),
                           make_rational(1, 24)}));
}

TEST_CASE("reduce produces the canonical quotient") {
    Polynomial x = Polynomial::x();
    RationalFunction two = reduce(x * Rational(2), x);
    CHECK(two.num == poly({Rational(2)}));
    CHECK(two.den == poly({Rational(1)}));
    CHECK(two.unreduced_deg_num == 1);
    CHECK(two.unreduced_deg_den == 1);

    RationalFunction lin = reduce(poly({Rational(-1), Rational(0), Rational(1)}),
                                  poly({Rational(-1), Rational(1)}));
    CHECK(lin.num == poly({Rational(1), Rational(1)}));  // x + 1
    CHECK(lin.den == poly({Rational(1)}));

    // p(p^2-1)/3 over p^3-p reduces to the constant 1/3
    Polynomial num = poly({Rational(0), make_rational(-1, 3), Rational(0), make_rational(1, 3)});
    Polynomial den = poly({Rational(0), Rational(-1), Rational(0), Rational(1)});
    RationalFunction third = reduce(num, den);
    CHECK(third.num == poly({Rational(1)}));
    CHECK(third.den == poly({Rational(3)}));
    CHECK(third.unreduced_deg_num == 3);
    CHECK(third.unreduced_deg_den == 3);

    CHECK_THROWS_AS(reduce(x, Polynomial()), std::domain_error);
}

TEST_CASE("reduce is invariant under common factors") {
    testing::Rng rng;
    for (int round = 0; round < 40; ++round) {
        Polynomial a = rng.polynomial(3);
        Polynomial b = rng.nonzero_polynomial(3);
        Polynomial h = rng.nonzero_polynomial(2);
        CHECK(reduce(a * h, b * h) == reduce(a, b));
    }
}

TEST_CASE("reduced form has integer coefficients and positive leading denominator") {
    testing::Rng rng;
    for (int round = 0; round < 40; ++round) {
        RationalFunction f = reduce(rng.polynomial(4, 40), rng.nonzero_polynomial(4, 40));
        CHECK(f.den.leading() > 0);
        Integer content(0);
        for (const auto& c : f.num.coeffs()) {
            CHECK(c.get_den() == 1);
            content = gcd(content, c.get_num());
        }
        for (const auto& c : f.den.coeffs()) {
            CHECK(c.get_den() == 1);
            content = gcd(content, c.get_num());
        }
        CHECK(content == 1);
        CHECK(poly_gcd(f.num, f.den).degree() <= 0);
    }
}

TEST_CASE("rational function evaluation") {
    RationalFunction f = reduce(poly({Rational(1), Rational(1)}), poly({Rational(2)}));
    CHECK(f(Rational(3)) == Rational(2));
    RationalFunction g = reduce(poly({Rational(1)}), Polynomial::x());
    CHECK_THROWS_AS(g(Rational(0)), std::domain_error);
}

TEST_CASE("polynomial rendering") {
    CHECK(poly({Rational(1), make_rational(13, 6)}).to_string("k") == "13/6*k + 1");
    CHECK(poly({Rational(0), Rational(-1), Rational(0), Rational(1)}).to_string("p") ==
          "p^3 - p");
    CHECK(Polynomial().to_string() == "0");
}

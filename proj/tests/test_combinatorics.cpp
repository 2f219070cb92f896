#include "hkq/combinatorics.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace hkq;

namespace {

// Straight filter over all n! permutations, independent of the pruned
// enumeration inside the library.
Integer alternating_by_full_scan(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    Integer count(0);
    do {
        bool ok = true;
        for (int i = 0; ok && i + 1 < n; ++i) {
            bool descend = (i % 2 == 0);
            ok = descend ? perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i) + 1]
                         : perm[static_cast<std::size_t>(i)] < perm[static_cast<std::size_t>(i) + 1];
        }
        if (ok) count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::vector<long> to_longs(const std::vector<Integer>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

}  // namespace

TEST_CASE("zigzag numbers by the boustrophedon recurrence") {
    CHECK(to_longs(zigzag(0)) == std::vector<long>{1});
    CHECK(to_longs(zigzag(6)) == std::vector<long>{1, 1, 1, 2, 5, 16, 61});
    CHECK(zigzag(12).back() == 2702765);
}

TEST_CASE("zigzag agrees with direct enumeration") {
    for (int n = 1; n <= 10; ++n) CHECK(zigzag(n).back() == alternating_by_full_scan(n));
    // the pruned enumerator reaches further
    CHECK(count_alternating_by_enumeration(12) == 2702765);
}

TEST_CASE("swap tables at small dimension") {
    CHECK(swap_table(1).s.empty());
    CHECK(to_longs(swap_table(2).s) == std::vector<long>{1});
    CHECK(to_longs(swap_table(3).s) == std::vector<long>{1, 1});
    CHECK(to_longs(swap_table(4).s) == std::vector<long>{1, 3, 1});
    CHECK(to_longs(swap_table(5).s) == std::vector<long>{1, 7, 7, 1});
}

TEST_CASE("swap table invariants: total, palindrome, first moment") {
    std::vector<Integer> e = zigzag(10);
    for (int d = 2; d <= 10; ++d) {
        SwapTable t = swap_table(d);
        CHECK(t.total() == e[static_cast<std::size_t>(d)]);
        std::vector<Integer> reversed(t.s.rbegin(), t.s.rend());
        CHECK(t.s == reversed);
        CHECK(2 * t.weighted_sum(1) == e[static_cast<std::size_t>(d)] * (d - 2));
    }
}

TEST_CASE("swap table cap is enforced by name") {
    CHECK_THROWS_WITH_AS(swap_table(13), "swap table dimension 13 exceeds enumeration cap 12",
                         std::invalid_argument);
    CHECK_THROWS_AS(swap_table(7, 6), std::invalid_argument);
}

TEST_CASE("binomial-weighted sums over swap tables") {
    std::vector<Integer> e = zigzag(9);
    for (int d = 2; d <= 9; ++d) CHECK(coeff_sum_binom(d, 0) == e[static_cast<std::size_t>(d)]);
    CHECK(coeff_sum_binom(3, 1) == 1);
}

TEST_CASE("even-d symmetric pairing of the second binomial moment") {
    for (int d = 4; d <= 10; d += 2) {
        SwapTable t = swap_table(d);
        long c = d / 2 - 1;
        Integer rhs = binomial(c, 2) * t.total();
        for (long a = 1; a <= c; ++a)
            rhs += Integer(a * a) * t.s[static_cast<std::size_t>(c + a)];
        CHECK(coeff_sum_binom(d, 2) == rhs);
    }
}

TEST_CASE("alternating surjection counts") {
    CHECK(kreweras_u(3, 3) == 2);  // equals E_3
    CHECK(kreweras_u(3, 2) == 1);  // only (2,1,2)
    CHECK(kreweras_u(3, 0) == 0);
    CHECK(kreweras_u(3, 4) == 0);
    CHECK_THROWS_AS(kreweras_u(10, 3), std::invalid_argument);
    std::vector<Integer> e = zigzag(7);
    for (int n = 1; n <= 7; ++n) CHECK(kreweras_u(n, n) == e[static_cast<std::size_t>(n)]);
}

TEST_CASE("alternating surjections match the swap-table identity") {
    for (int n = 2; n <= 7; ++n)
        for (int r = 1; r <= n; ++r)
            CHECK(kreweras_u(n, n - r) == coeff_sum_binom(n, r));
}

TEST_CASE("alternating descent tables") {
    CHECK(to_longs(alt_descent_table(1).a) == std::vector<long>{1});
    CHECK(to_longs(alt_descent_table(2).a) == std::vector<long>{1, 1});
    CHECK(to_longs(alt_descent_table(3).a) == std::vector<long>{2, 2, 2});
    CHECK(to_longs(alt_descent_table(4).a) == std::vector<long>{5, 7, 7, 5});
    CHECK_THROWS_AS(alt_descent_table(11), std::invalid_argument);

    std::vector<Integer> e = zigzag(8);
    for (int n = 1; n <= 8; ++n) {
        AltDescentTable t = alt_descent_table(n);
        Integer total(0);
        for (const auto& v : t.a) total += v;
        CHECK(total == factorial(static_cast<unsigned long>(n)));
        CHECK(t.a[0] == e[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("alternating Eulerian polynomials") {
    CHECK(alt_eulerian_poly(1) == Polynomial(Rational(1)));
    CHECK(alt_eulerian_poly(2) == Polynomial({Rational(1), Rational(1)}));
    for (int n = 1; n <= 7; ++n)
        CHECK(alt_eulerian_poly(n)(Rational(1)) ==
              Rational(factorial(static_cast<unsigned long>(n))));
}

TEST_CASE("probe: s_{d+1}(1) recursion") {
    for (const auto& row : sd1_recursion_probe(3, 9)) CHECK(row.holds);
}

TEST_CASE("probe: sign pattern of the second-moment ratio") {
    auto rows = sec34_probe(2, 9);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].quantity == Rational(-3));                // n = 2
    CHECK(rows[1].quantity == Rational(-1));                // n = 3
    CHECK(rows[2].quantity == make_rational(-1, 5));        // n = 4
    CHECK(rows[3].quantity == Rational(0));                 // n = 5
    for (std::size_t i = 3; i < rows.size(); ++i) CHECK(rows[i].quantity >= 0);
}

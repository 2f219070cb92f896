#include "hkq/appendix.hpp"

#include "hkq/combinatorics.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace hkq;

namespace {

CornerWord word(std::initializer_list<Letter> letters) {
    CornerWord w;
    w.letters = letters;
    return w;
}

}  // namespace

TEST_CASE("single-letter words") {
    auto words = enumerate_words(1);
    REQUIRE(words.size() == 2);
    CHECK(words[0] == word({Letter::CUpPlus}));
    CHECK(words[1] == word({Letter::U}));
}

TEST_CASE("two-letter words follow the sign rules") {
    auto words = enumerate_words(2);
    CHECK(words.size() == 5);
    auto contains = [&](const CornerWord& w) {
        for (const auto& x : words)
            if (x == w) return true;
        return false;
    };
    CHECK(contains(word({Letter::U, Letter::U})));
    CHECK(contains(word({Letter::U, Letter::CUpPlus})));
    CHECK_FALSE(contains(word({Letter::U, Letter::B})));
    CHECK(is_valid_word(word({Letter::U, Letter::U})));
    CHECK_FALSE(is_valid_word(word({Letter::U, Letter::B})));
    CHECK_FALSE(is_valid_word(word({Letter::B, Letter::B})));  // boundary rejects b start
}

TEST_CASE("word counts follow (3^n + 1)/2") {
    long expected = 2;  // (3^1+1)/2
    for (int n = 1; n <= 8; ++n) {
        CHECK(static_cast<long>(enumerate_words(n).size()) == expected);
        expected = 3 * expected - 1;  // (3^{n+1}+1)/2 from (3^n+1)/2
    }
    CHECK_THROWS_AS(enumerate_words(15), std::invalid_argument);
}

TEST_CASE("signature and projection") {
    CornerWord w = word({Letter::U, Letter::CUpPlus, Letter::CDownPlus, Letter::CUpMinus});
    // adjacency: u(+,+) c^+(+,+) c_+(+,-) c^-(-,+): signs chain +,+,+,-,-..
    CHECK(signature(w) == 3);
    CHECK(phi(w) == "glll");
    CHECK(phi(word({Letter::U, Letter::U})) == "gg");
    CHECK(signature(word({Letter::U, Letter::U})) == 0);
    // signature counts the l's of the projection
    for (const auto& v : enumerate_words(5)) {
        GLWord g = phi(v);
        CHECK(signature(v) == static_cast<int>(std::count(g.begin(), g.end(), 'l')));
    }
}

TEST_CASE("fiber counts") {
    CHECK(fiber_count("gggg") == 1);
    for (int n = 1; n <= 6; ++n)
        for (int spot = 0; spot < n; ++spot) {
            GLWord v(static_cast<std::size_t>(n), 'g');
            v[static_cast<std::size_t>(spot)] = 'l';
            CHECK(fiber_count(v) == 1);  // exactly one lift with a single l
        }
    CHECK(fiber_count("ll") == 2);
    CHECK(fiber_count("lll") == 4);
    CHECK_THROWS_AS(fiber_count("gx"), std::invalid_argument);

    // 2^{max(0, k-1)} for every projection, and the fibers partition W_n
    for (int n = 1; n <= 8; ++n) {
        std::map<GLWord, long> hist;
        for (const auto& w : enumerate_words(n)) hist[phi(w)] += 1;
        long total = 0;
        for (long mask = 0; mask < (1L << n); ++mask) {
            GLWord v;
            int ls = 0;
            for (int i = 0; i < n; ++i) {
                bool is_l = (mask >> i) & 1;
                v += is_l ? 'l' : 'g';
                ls += is_l;
            }
            Integer expect = int_pow(Integer(2), static_cast<unsigned long>(std::max(0, ls - 1)));
            CHECK(fiber_count(v) == expect);
            auto it = hist.find(v);
            long in_enum = it == hist.end() ? 0 : it->second;
            CHECK(Integer(in_enum) == expect);
            total += in_enum;
        }
        CHECK(total == static_cast<long>(enumerate_words(n).size()));
    }
}

TEST_CASE("leading coefficient of Q powers") {
    CHECK(leading_coeff_Q(Integer(0), 3) == 0);
    CHECK(leading_coeff_Q(Integer(1), 2) == 1);
    std::vector<Integer> e = zigzag(5);
    for (int n = 1; n <= 5; ++n) {
        Rational bridge = Rational(int_pow(Integer(2), static_cast<unsigned long>(n))) *
                          (Rational(1) + make_rational(e[static_cast<std::size_t>(n)],
                                                       factorial(static_cast<unsigned long>(n))));
        CHECK(leading_coeff_Q(Integer(2), n) == bridge);
    }
    for (int n = 1; n <= 5; ++n)
        for (long q : {0L, 1L, 2L, 3L})
            CHECK(leading_coeff_Q(Integer(q), n) == leading_coeff_closed_form(Integer(q), n));
}

TEST_CASE("volume lemma per signature") {
    VolumeLemmaReport r2 = verify_alt_volume_lemma(2);
    CHECK(r2.all_ok());
    REQUIRE(r2.rows.size() == 2);
    CHECK(r2.rows[0].volume_sum == make_rational(1, 2));
    CHECK(r2.rows[1].volume_sum == make_rational(1, 2));

    VolumeLemmaReport r3 = verify_alt_volume_lemma(3);
    CHECK(r3.all_ok());
    CHECK(r3.rows[0].volume_sum == make_rational(1, 3));  // A(3,0)/3! = 2/6
    CHECK(r3.total == 1);

    CHECK(verify_alt_volume_lemma(4).all_ok());
    CHECK_THROWS_AS(verify_alt_volume_lemma(7), std::invalid_argument);
}

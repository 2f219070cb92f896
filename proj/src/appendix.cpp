#include "hkq/appendix.hpp"

#include "hkq/combinatorics.hpp"
#include "hkq/matrices.hpp"
#include "hkq/polytope.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hkq {

namespace {

constexpr std::array<Letter, 6> kCanonicalOrder = {Letter::B,         Letter::CUpPlus,
                                                   Letter::CUpMinus,  Letter::CDownPlus,
                                                   Letter::CDownMinus, Letter::U};

void check_word_cap(int n, int cap) {
    if (n < 1) throw std::invalid_argument("word length must be >= 1");
    if (n > cap)
        throw std::invalid_argument("word length " + std::to_string(n) +
                                    " exceeds enumeration cap " + std::to_string(cap));
}

}  // namespace

std::string letter_name(Letter l) {
    switch (l) {
        case Letter::B: return "b";
        case Letter::U: return "u";
        case Letter::CUpPlus: return "c^+";
        case Letter::CUpMinus: return "c^-";
        case Letter::CDownPlus: return "c_+";
        case Letter::CDownMinus: return "c_-";
    }
    throw std::logic_error("unknown letter");
}

bool letter_is_corner(Letter l) { return l == Letter::B || l == Letter::U; }

int letter_first_sign(Letter l) {
    switch (l) {
        case Letter::U:
        case Letter::CUpPlus:
        case Letter::CDownPlus: return +1;
        case Letter::B:
        case Letter::CUpMinus:
        case Letter::CDownMinus: return -1;
    }
    throw std::logic_error("unknown letter");
}

int letter_second_sign(Letter l) {
    switch (l) {
        case Letter::U:
        case Letter::CUpPlus:
        case Letter::CUpMinus: return +1;
        case Letter::B:
        case Letter::CDownPlus:
        case Letter::CDownMinus: return -1;
    }
    throw std::logic_error("unknown letter");
}

std::string CornerWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += " ";
        out += letter_name(letters[i]);
    }
    return out;
}

bool is_valid_word(const CornerWord& w) {
    if (w.letters.empty()) return false;
    if (letter_first_sign(w.letters.front()) != +1) return false;
    if (letter_second_sign(w.letters.back()) != +1) return false;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (letter_second_sign(w.letters[i]) != letter_first_sign(w.letters[i + 1]))
            return false;
    return true;
}

std::vector<CornerWord> enumerate_words(int n, int cap) {
    check_word_cap(n, cap);
    std::vector<CornerWord> out;
    CornerWord w;
    w.letters.reserve(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(w.letters.size()) == n) {
            if (letter_second_sign(w.letters.back()) == +1) out.push_back(w);
            return;
        }
        for (Letter l : kCanonicalOrder) {
            if (w.letters.empty()) {
                if (letter_first_sign(l) != +1) continue;
            } else if (letter_second_sign(w.letters.back()) != letter_first_sign(l)) {
                continue;
            }
            w.letters.push_back(l);
            self(self);
            w.letters.pop_back();
        }
    };
    rec(rec);
    return out;
}

int signature(const CornerWord& w) {
    int c = 0;
    for (Letter l : w.letters)
        if (!letter_is_corner(l)) ++c;
    return c;
}

GLWord phi(const CornerWord& w) {
    GLWord v;
    v.reserve(w.letters.size());
    for (Letter l : w.letters) v += letter_is_corner(l) ? 'g' : 'l';
    return v;
}

Integer fiber_count(const GLWord& v, int cap) {
    check_word_cap(static_cast<int>(v.size()), cap);
    for (char c : v)
        if (c != 'g' && c != 'l') throw std::invalid_argument("GL word must be over {g, l}");
    Integer count(0);
    CornerWord w;
    auto rec = [&](auto&& self) -> void {
        const std::size_t k = w.letters.size();
        if (k == v.size()) {
            if (letter_second_sign(w.letters.back()) == +1) count += 1;
            return;
        }
        for (Letter l : kCanonicalOrder) {
            if (letter_is_corner(l) != (v[k] == 'g')) continue;
            if (w.letters.empty()) {
                if (letter_first_sign(l) != +1) continue;
            } else if (letter_second_sign(w.letters.back()) != letter_first_sign(l)) {
                continue;
            }
            w.letters.push_back(l);
            self(self);
            w.letters.pop_back();
        }
    };
    rec(rec);
    return count;
}

Rational leading_coeff_Q(const Integer& q, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (q < 0) throw std::invalid_argument("q must be >= 0");
    std::vector<std::pair<Rational, Rational>> points;
    for (long k = 1; k <= n + 2; ++k)
        points.emplace_back(Rational(k),
                            Rational(corner_power(StructuredMatrixSpec::Q(q, k), n + 1)));
    Polynomial poly = interpolate(points);
    if (poly.degree() > n)
        throw std::logic_error("matrix power grows faster than degree n in k");
    Rational lead = poly.coeff(n);
    if (lead != leading_coeff_closed_form(q, n))
        throw std::logic_error("leading coefficient disagrees with its closed form");
    return lead;
}

Rational leading_coeff_closed_form(const Integer& q, int n) {
    AltDescentTable table = alt_descent_table(n);
    Integer sum(0);
    for (int k = 0; k < n; ++k) {
        Integer weight = int_pow(Integer(2), static_cast<unsigned long>(std::max(0, k - 1)));
        sum += weight * table.a[static_cast<std::size_t>(k)] *
               int_pow(q, static_cast<unsigned long>(n + 1 - k));
    }
    return make_rational(sum, factorial(static_cast<unsigned long>(n)));
}

bool VolumeLemmaReport::all_ok() const {
    for (const auto& row : rows)
        if (!row.ok) return false;
    return total == 1;
}

VolumeLemmaReport verify_alt_volume_lemma(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("volume lemma check covers 2 <= n <= 6");
    AltDescentTable table = alt_descent_table(n);
    VolumeLemmaReport report;
    report.n = n;
    report.total = 0;
    std::vector<Rational> sums(static_cast<std::size_t>(n), Rational(0));
    const int constraints = n - 1;
    for (long mask = 0; mask < (1L << constraints); ++mask) {
        std::vector<Ineq> pattern;
        int ge = 0;
        for (int i = 0; i < constraints; ++i) {
            bool is_ge = (mask >> i) & 1;
            pattern.push_back(is_ge ? Ineq::Ge : Ineq::Le);
            if (is_ge) ++ge;
        }
        Rational vol = volume_of_region(n, pattern);
        sums[static_cast<std::size_t>(ge)] += vol;
        report.total += vol;
    }
    for (int j = 0; j < n; ++j) {
        VolumeLemmaRow row;
        row.signs_ge = j;
        row.volume_sum = sums[static_cast<std::size_t>(j)];
        row.expected = make_rational(table.a[static_cast<std::size_t>(j)],
                                     factorial(static_cast<unsigned long>(n)));
        row.ok = (row.volume_sum == row.expected);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace hkq

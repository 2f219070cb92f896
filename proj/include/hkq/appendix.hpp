#pragma once

// Words over the six-letter alphabet {b, u, c^+, c^-, c_+, c_-} that encode
// the nonzero entry patterns of powers of Q(q,k), the projection onto
// {g, l} words, fiber counts, and the leading coefficient of
// k -> [Q(q,k)^{n+1}]_{(1,1)}.
//
// Each letter is a region of the square for one consecutive coordinate pair:
// b and u are the two corner triangles (entry value q), the four c's are the
// quadrants of the center rhombus (entry value 1). A letter carries the signs
// of its two coordinates; adjacent letters must agree on the shared middle
// coordinate, and the fixed boundary indices of the (1,1) entry force the
// first letter's first coordinate and the last letter's second coordinate to
// the positive side. With these rules |W_n| = (3^n + 1)/2 and every {g,l}
// word with k l's has exactly 2^{max(0,k-1)} preimages.

#include "hkq/polynomial.hpp"
#include "hkq/rational.hpp"

#include <string>
#include <vector>

namespace hkq {

// Canonical order is the lexicographic order of the rendered names:
// b < c^+ < c^- < c_+ < c_- < u.
enum class Letter : std::uint8_t { B, CUpPlus, CUpMinus, CDownPlus, CDownMinus, U };

inline constexpr int kWordEnumCap = 14;

std::string letter_name(Letter l);
bool letter_is_corner(Letter l);  // b, u
int letter_first_sign(Letter l);
int letter_second_sign(Letter l);

struct CornerWord {
    std::vector<Letter> letters;
    std::string to_string() const;
    bool operator==(const CornerWord& o) const { return letters == o.letters; }
};

// 'g' for corner letters, 'l' for rhombus letters.
using GLWord = std::string;

bool is_valid_word(const CornerWord& w);

// All valid words of length n, lexicographic in the canonical letter order.
std::vector<CornerWord> enumerate_words(int n, int cap = kWordEnumCap);

// Number of rhombus (c-type) letters.
int signature(const CornerWord& w);

GLWord phi(const CornerWord& w);

// Number of valid corner words projecting to v, by filtered enumeration.
Integer fiber_count(const GLWord& v, int cap = kWordEnumCap);

// Leading (k^n) coefficient of the interpolated polynomial
// k -> [Q(q,k)^{n+1}]_{(1,1)}, sampled at k = 1..n+2 so the degree bound is
// itself checked.
Rational leading_coeff_Q(const Integer& q, int n);

// The closed form the leading coefficient satisfies,
//   (1/n!) * sum_k 2^{max(0,k-1)} A(n,k) q^{n+1-k},
// i.e. q^2/(2 n!) * (q^{n-1} A(n,0) + 2^{n-1} A_n(q/2)).
Rational leading_coeff_closed_form(const Integer& q, int n);

// Per-signature volume sums of the cube partition against A(n,j)/n!.
struct VolumeLemmaRow {
    int signs_ge;        // number of '>=' constraints
    Rational volume_sum;
    Rational expected;   // A(n, signs_ge)/n!
    bool ok;
};
struct VolumeLemmaReport {
    int n;
    std::vector<VolumeLemmaRow> rows;
    Rational total;  // must be 1
    bool all_ok() const;
};
VolumeLemmaReport verify_alt_volume_lemma(int n);

}  // namespace hkq

#pragma once

// Alternating-permutation machinery: Euler zigzag numbers, the swap-statistic
// histogram (the h*-vector of the Fibonacci polytope), alternating surjections,
// alternating descents and their generating polynomials.
//
// Convention used throughout: a permutation s of [d] is alternating iff
// s(1) > s(2) < s(3) > ... (first step descending). The tag "down-up-v1"
// identifies this convention in caches.

#include "hkq/polynomial.hpp"
#include "hkq/rational.hpp"

#include <vector>

namespace hkq {

inline constexpr const char* kAlternatingConventionTag = "down-up-v1";

// Default enumeration caps. These are configuration: every entry point takes
// the cap as a parameter and only the defaults live here.
inline constexpr int kSwapEnumCap = 12;
inline constexpr int kKrewerasCap = 9;
inline constexpr int kAltDescentCap = 10;

// E_0..E_{n_max} by the boustrophedon (Entringer) recurrence.
std::vector<Integer> zigzag(int n_max);

// Independent oracle for E_n: direct count of alternating permutations.
Integer count_alternating_by_enumeration(int n);

// Histogram of the swap statistic over alternating permutations of [d]:
// s[m] = #{sigma : swap(sigma) = m}, m = 0..d-2. swap(sigma) counts the
// values i < d whose position satisfies pos(i) < pos(i+1) - 1.
struct SwapTable {
    int d = 0;
    std::vector<Integer> s;  // length max(d-1, 0)

    Integer total() const;                    // = E_d
    Integer weighted_sum(long power) const;   // sum m^power * s[m]
};

SwapTable swap_table(int d, int cap = kSwapEnumCap);

// sum_m C(m, i) * s_d(m)
Integer coeff_sum_binom(int d, int i, int cap = kSwapEnumCap);

// Number of surjections f: [n] -> [r] with f(1) > f(2) < f(3) > ..., by
// direct enumeration. Out-of-range r yields 0.
Integer kreweras_u(int n, int r, int cap = kKrewerasCap);

// A(n, k) = number of permutations of [n] with k alternating descents
// (odd i with pi(i) > pi(i+1), or even i with pi(i) < pi(i+1)).
struct AltDescentTable {
    int n = 0;
    std::vector<Integer> a;  // length n, index = descent count
};

AltDescentTable alt_descent_table(int n, int cap = kAltDescentCap);

// A_n(x) = sum_k A(n,k) x^k
Polynomial alt_eulerian_poly(int n, int cap = kAltDescentCap);

// Probe: does s_{d+1}(1) = s_d(1) + s_{d-1}(1) + d - 1 hold?
struct Sd1ProbeRow {
    int d;
    Integer lhs;  // s_{d+1}(1)
    Integer rhs;  // s_d(1) + s_{d-1}(1) + d - 1
    bool holds;
};
std::vector<Sd1ProbeRow> sd1_recursion_probe(int d_min, int d_max, int cap = kSwapEnumCap);

// Probe: the exact value of 24*u^n_{n-2}/u^n_n - 3n^2 + 17n - 25, with
// u^n_{n-2} computed through the swap table and u^n_n = E_n.
struct Sec34ProbeRow {
    int n;
    Integer u_n_minus_2;
    Integer u_n;
    Rational quantity;
};
std::vector<Sec34ProbeRow> sec34_probe(int n_min, int n_max, int cap = kSwapEnumCap);

}  // namespace hkq

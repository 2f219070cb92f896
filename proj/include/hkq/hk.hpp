#pragma once

// Hilbert-Kunz multiplicity of the quadric x_0^2 + ... + x_d^2 in odd
// characteristic, by three mutually verifying routes:
//
//   matrix:   1 + ([T_a^{d+1}]_{11} - p^d) / (p^d - [N_a^{d+1}]_{11}),  a = (p-1)/2
//   ehrhart:  1 + 2^d |(a-1)F_d| / (p^d - |a E_{d-2}|)
//   repring:  the representation-ring colength formula (prime p only)
//
// plus the closed rational function of p for fixed d, the large-p limit
// 1 + E_d/d!, and monotonicity / convergence / parity scanners. The matrix
// and Ehrhart forms are defined for every odd p >= 3, which is what the
// dense scans rely on; primality only matters for the representation ring.

#include "hkq/polynomial.hpp"
#include "hkq/rational.hpp"

#include <vector>

namespace hkq {

enum class EhkMethod : std::uint8_t { RepRing, Matrix, Ehrhart };

struct EhkResult {
    long p;
    int d;
    Rational value;  // always > 1
    EhkMethod method;
};

Rational ehk_matrix(long p, int d);
Rational ehk_ehrhart(long p, int d);

// Dispatch on the method; the representation ring insists on a prime p.
EhkResult compute_ehk(long p, int d, EhkMethod method);
const char* method_name(EhkMethod method);

// e_HK as a reduced rational function of p for fixed d, assembled by exact
// interpolation of the two lattice-count polynomials. The unreduced pair
// (2^d P_d((p-3)/2), p^d - Q_{d-2}((p-1)/2)) has degree exactly d on both
// sides and is kept alongside the reduced function.
struct EhkFunction {
    int d;
    RationalFunction reduced;  // e_HK itself, i.e. 1 + num/den combined
    Polynomial unreduced_num;
    Polynomial unreduced_den;

    Rational operator()(long p) const { return reduced(Rational(p)); }
};

EhkFunction ehk_function(int d);

// lim_{p -> infinity} e_HK = 1 + E_d/d!.
Rational gm_limit(int d);

// Exact values of (e_HK(p,d) - gm_limit(d)) * p^2.
struct ConvergenceRow {
    long p;
    Rational scaled_gap;
};
std::vector<ConvergenceRow> convergence_probe(int d, const std::vector<long>& p_list);

// Strict decrease of d -> e_HK(p, d).
struct MonotoneDReport {
    long p;
    std::vector<Rational> values;  // d = 1..d_max
    bool strictly_decreasing;
    int witness_d;  // first d with value(d) <= value(d+1), or 0
};
MonotoneDReport scan_monotone_d(long p, int d_max);

// Behaviour of p -> e_HK(p, d) over odd p in [3, p_max]. Non-increase is
// the finding; strictness is reported (d <= 3 gives constants).
struct MonotonePReport {
    int d;
    std::vector<std::pair<long, Rational>> values;
    bool non_increasing;
    bool strictly_decreasing;
    bool constant;
    long witness_p;  // first odd p with value(p) < value(p+2), or 0
};
MonotonePReport scan_monotone_p(int d, long p_max);

// Exponent parities (mod 2) of the nonzero coefficients of a polynomial.
std::vector<int> coefficient_parities(const Polynomial& poly);

// True iff both unreduced polynomials contain only exponents congruent to
// d mod 2. Fails at d = 1, where the pair is (p-1)/(p-1); callers that need
// the detail use coefficient_parities directly.
bool parity_check(int d);

// Leading-coefficient checks for the interpolated Ehrhart polynomial P_d:
// the k^d, k^{d-1}, k^{d-2} coefficients against their closed forms, and the
// vanishing x^{d-1} coefficient of the recentred P_d(x - 3/2).
struct EhrhartCoeffReport {
    int d;
    bool leading_ok;
    bool second_ok;
    bool third_ok;
    bool shift_kills_second;
    bool shifted_third_ok;
    bool all_ok() const {
        return leading_ok && second_ok && third_ok && shift_kills_second && shifted_third_ok;
    }
};
EhrhartCoeffReport ehrhart_coeff_check(int d);

}  // namespace hkq

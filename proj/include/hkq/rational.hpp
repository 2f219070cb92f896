#pragma once

// Exact arbitrary-precision integers and rationals, backed by GMP.
// Every quantity in this library is exact; there is no floating point
// anywhere in the repository. Decimal renderings are computed by
// integer long division and are display-only.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hkq {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational: reduced to lowest terms, denominator > 0.
// Reduction happens here, on construction, so equality is structural.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline Integer int_pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k) for integer n >= 0; returns 0 when k > n or k < 0.
inline Integer binomial(const Integer& n, long k) {
    if (k < 0) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline Integer binomial(long n, long k) { return binomial(Integer(n), k); }

bool is_odd_prime(const Integer& p);

// Parse a (possibly signed) decimal string; rejects anything else.
Integer integer_from_decimal(const std::string& s);

// Decimal rendering of an exact rational with `digits` significant digits,
// round-half-up, computed purely with integer arithmetic.
std::string decimal_approx(const Rational& x, int digits = 20);

std::string to_string(const Rational& x);

}  // namespace hkq

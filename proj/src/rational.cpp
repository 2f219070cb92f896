#include "hkq/rational.hpp"

#include <cctype>

namespace hkq {

bool is_odd_prime(const Integer& p) {
    if (p < 3 || p % 2 == 0) return false;
    // Exact for the small magnitudes this library sees (a few thousand).
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

Integer integer_from_decimal(const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start)
        throw std::invalid_argument("empty integer literal");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("malformed integer literal: " + s);
    return Integer(s);
}

std::string to_string(const Rational& x) { return x.get_str(); }

namespace {

// floor(log10(a/d)) for positive a, d
int decimal_exponent(const Integer& a, const Integer& d) {
    if (a >= d) return static_cast<int>(Integer(a / d).get_str().size()) - 1;
    int e = -1;
    Integer scaled = a * 10;
    while (scaled < d) {
        scaled *= 10;
        --e;
    }
    return e;
}

}  // namespace

std::string decimal_approx(const Rational& x, int digits) {
    if (digits < 1) throw std::invalid_argument("need at least one digit");
    if (x == 0) return "0";
    const Integer a = abs(x.get_num());
    const Integer d = x.get_den();
    const bool negative = x < 0;

    int e = decimal_exponent(a, d);
    std::string mant;
    for (;;) {
        // round-half-up to `digits` significant digits
        int shift = digits - 1 - e;
        Integer rounded;
        if (shift >= 0)
            rounded = (2 * a * int_pow(10, static_cast<unsigned long>(shift)) + d) / (2 * d);
        else
            rounded = (2 * a + d * int_pow(10, static_cast<unsigned long>(-shift))) /
                      (2 * d * int_pow(10, static_cast<unsigned long>(-shift)));
        mant = rounded.get_str();
        if (static_cast<int>(mant.size()) > digits) {
            ++e;  // rounding carried: 9.99... -> 10.0...
            continue;
        }
        break;
    }

    std::string out = negative ? "-" : "";
    if (e >= 0) {
        if (e + 1 >= digits) {
            out += mant + std::string(static_cast<std::size_t>(e + 1 - digits), '0');
        } else {
            out += mant.substr(0, static_cast<std::size_t>(e + 1)) + "." +
                   mant.substr(static_cast<std::size_t>(e + 1));
        }
    } else {
        out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + mant;
    }
    return out;
}

}  // namespace hkq

#pragma once

// Dense univariate polynomials over exact rationals, plus interpolation,
// composition and reduced rational functions. Coefficients are stored in
// ascending degree with no trailing zeros; the empty vector is the zero
// polynomial (degree -1).

#include "hkq/rational.hpp"

#include <utility>
#include <vector>

namespace hkq {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Polynomial(const Rational& constant) : c_{constant} { trim(); }

    static Polynomial x();  // the monomial x

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Coefficient of x^i (zero beyond the stored degree).
    Rational coeff(int i) const {
        if (i < 0 || i > degree()) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const;  // exact Horner evaluation

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rational& s) const;

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Unique polynomial of degree < points.size() through all points.
// Duplicate x-coordinates are rejected ("degenerate interpolation node").
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// outer(inner(x)), exact.
Polynomial compose(const Polynomial& outer, const Polynomial& inner);

// Quotient and remainder of exact polynomial division.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

// Monic gcd over the rationals.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// A reduced quotient of polynomials: gcd(num, den) = 1, both with integer
// coefficients of trivial common content, den's leading coefficient > 0.
// The degrees of the unreduced inputs are kept as metadata.
struct RationalFunction {
    Polynomial num;
    Polynomial den;
    int unreduced_deg_num = -1;
    int unreduced_deg_den = -1;

    Rational operator()(const Rational& x) const;
    bool operator==(const RationalFunction& o) const {
        return num == o.num && den == o.den;
    }
    std::string to_string(const std::string& var = "x") const;
};

RationalFunction reduce(const Polynomial& num, const Polynomial& den);

}  // namespace hkq

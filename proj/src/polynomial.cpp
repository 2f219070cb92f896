#include "hkq/polynomial.hpp"

#include <sstream>

namespace hkq {

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Polynomial(std::move(r));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        Rational a = abs(c);
        bool unit = (a == 1);
        if (i == 0 || !unit) out << a.get_str();
        if (i > 0) {
            if (!unit) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("degenerate interpolation node");

    // Newton divided differences.
    std::vector<Rational> xs(n), coef(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = points[i].first;
        coef[i] = points[i].second;
    }
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }

    // Expand the Newton form from the innermost factor outwards.
    Polynomial result(coef[n - 1]);
    for (std::size_t j = n - 1; j-- > 0;) {
        Polynomial lin({-xs[j], Rational(1)});
        result = result * lin + Polynomial(coef[j]);
    }
    return result;
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
    Polynomial acc;
    for (int i = outer.degree(); i >= 0; --i)
        acc = acc * inner + Polynomial(outer.coeff(i));
    return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(num.coeffs());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {Polynomial(), num};
    std::vector<Rational> quot(static_cast<std::size_t>(dn - dd + 1), Rational(0));
    Rational lead = den.leading();
    for (int i = dn; i >= dd; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / lead;
        quot[static_cast<std::size_t>(i - dd)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * den.coeff(j);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());  // monic
}

Rational RationalFunction::operator()(const Rational& x) const {
    Rational d = den(x);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (num.degree() <= 0 && den.degree() == 0)
        return hkq::to_string(num.coeff(0) / den.coeff(0));
    if (den.degree() == 0 && den.coeff(0) == 1) return num.to_string(var);
    return "(" + num.to_string(var) + ") / (" + den.to_string(var) + ")";
}

RationalFunction reduce(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RationalFunction rf;
    rf.unreduced_deg_num = num.degree();
    rf.unreduced_deg_den = den.degree();

    Polynomial n = num, d = den;
    if (!n.is_zero()) {
        Polynomial g = poly_gcd(n, d);
        n = divmod(n, g).first;
        d = divmod(d, g).first;
    }

    // Clear coefficient denominators, strip common content, and make the
    // denominator's leading coefficient positive.
    Integer lcm_den(1);
    for (const auto& c : n.coeffs()) lcm_den = lcm(lcm_den, c.get_den());
    for (const auto& c : d.coeffs()) lcm_den = lcm(lcm_den, c.get_den());
    Integer content(0);
    auto scan = [&](const Polynomial& p) {
        for (const auto& c : p.coeffs()) {
            Rational scaled = c * Rational(lcm_den);
            content = gcd(content, scaled.get_num());
        }
    };
    scan(n);
    scan(d);
    if (content == 0) content = 1;
    Rational scale = make_rational(lcm_den, content);
    n = n * scale;
    d = d * scale;
    if (d.leading() < 0) {
        n = -n;
        d = -d;
    }
    rf.num = std::move(n);
    rf.den = std::move(d);
    return rf;
}

}  // namespace hkq

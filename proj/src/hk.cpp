#include "hkq/hk.hpp"

#include "hkq/combinatorics.hpp"
#include "hkq/matrices.hpp"
#include "hkq/polytope.hpp"

#include <stdexcept>

namespace hkq {

namespace {

void check_odd_p(long p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("p must be odd and at least 3");
}

}  // namespace

Rational ehk_matrix(long p, int d) {
    check_odd_p(p);
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    const long a = (p - 1) / 2;
    Integer t = corner_power(StructuredMatrixSpec::T(a), d + 1);
    Integer n = corner_power(StructuredMatrixSpec::N(a), d + 1);
    Integer pd = int_pow(Integer(p), static_cast<unsigned long>(d));
    Integer den = pd - n;
    if (den == 0) throw std::logic_error("vanishing denominator in the matrix formula");
    return Rational(1) + make_rational(t - pd, den);
}

Rational ehk_ehrhart(long p, int d) {
    check_odd_p(p);
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    const long a = (p - 1) / 2;
    Integer num = int_pow(Integer(2), static_cast<unsigned long>(d)) * count_fibonacci(d, a - 1);
    Integer den = int_pow(Integer(p), static_cast<unsigned long>(d)) - count_extended(d - 2, a);
    if (den == 0) throw std::logic_error("vanishing denominator in the Ehrhart formula");
    return Rational(1) + make_rational(num, den);
}

EhkResult compute_ehk(long p, int d, EhkMethod method) {
    EhkResult result;
    result.p = p;
    result.d = d;
    result.method = method;
    switch (method) {
        case EhkMethod::RepRing: result.value = ehk_quadric_repring(p, d); break;
        case EhkMethod::Matrix: result.value = ehk_matrix(p, d); break;
        case EhkMethod::Ehrhart: result.value = ehk_ehrhart(p, d); break;
    }
    if (!(result.value > 1)) throw std::logic_error("multiplicity must exceed 1");
    return result;
}

const char* method_name(EhkMethod method) {
    switch (method) {
        case EhkMethod::RepRing: return "repring";
        case EhkMethod::Matrix: return "matrix";
        case EhkMethod::Ehrhart: return "ehrhart";
    }
    return "";
}

EhkFunction ehk_function(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");

    std::vector<std::pair<Rational, Rational>> fib_points;
    for (long k = 0; k <= d; ++k)
        fib_points.emplace_back(Rational(k), Rational(count_fibonacci(d, k)));
    Polynomial P = interpolate(fib_points);

    Polynomial Q(Rational(1));
    if (d >= 3) {
        std::vector<std::pair<Rational, Rational>> ext_points;
        for (long k = 0; k <= d - 2; ++k)
            ext_points.emplace_back(Rational(k), Rational(count_extended(d - 2, k)));
        Q = interpolate(ext_points);
    }

    const Polynomial half_shift3({make_rational(-3, 2), make_rational(1, 2)});  // (x-3)/2
    const Polynomial half_shift1({make_rational(-1, 2), make_rational(1, 2)});  // (x-1)/2

    EhkFunction f;
    f.d = d;
    f.unreduced_num =
        compose(P, half_shift3) * Rational(int_pow(Integer(2), static_cast<unsigned long>(d)));
    std::vector<Rational> xd(static_cast<std::size_t>(d) + 1, Rational(0));
    xd.back() = 1;
    f.unreduced_den = Polynomial(std::move(xd)) - compose(Q, half_shift1);
    // e_HK = 1 + num/den combined into one reduced quotient
    f.reduced = reduce(f.unreduced_den + f.unreduced_num, f.unreduced_den);
    return f;
}

Rational gm_limit(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    return Rational(1) + make_rational(zigzag(d).back(), factorial(static_cast<unsigned long>(d)));
}

std::vector<ConvergenceRow> convergence_probe(int d, const std::vector<long>& p_list) {
    EhkFunction f = ehk_function(d);
    Rational limit = gm_limit(d);
    std::vector<ConvergenceRow> rows;
    rows.reserve(p_list.size());
    for (long p : p_list) {
        check_odd_p(p);
        rows.push_back({p, (f(p) - limit) * Rational(Integer(p) * p)});
    }
    return rows;
}

MonotoneDReport scan_monotone_d(long p, int d_max) {
    check_odd_p(p);
    MonotoneDReport report;
    report.p = p;
    report.strictly_decreasing = true;
    report.witness_d = 0;
    for (int d = 1; d <= d_max; ++d) report.values.push_back(ehk_matrix(p, d));
    for (int d = 1; d < d_max; ++d) {
        if (!(report.values[static_cast<std::size_t>(d) - 1] >
              report.values[static_cast<std::size_t>(d)])) {
            report.strictly_decreasing = false;
            report.witness_d = d;
            break;
        }
    }
    return report;
}

MonotonePReport scan_monotone_p(int d, long p_max) {
    MonotonePReport report;
    report.d = d;
    report.non_increasing = true;
    report.strictly_decreasing = true;
    report.constant = true;
    report.witness_p = 0;
    EhkFunction f = ehk_function(d);
    for (long p = 3; p <= p_max; p += 2) report.values.emplace_back(p, f(p));
    for (std::size_t i = 0; i + 1 < report.values.size(); ++i) {
        const Rational& cur = report.values[i].second;
        const Rational& next = report.values[i + 1].second;
        if (cur < next) {
            report.non_increasing = false;
            if (report.witness_p == 0) report.witness_p = report.values[i].first;
        }
        if (cur != next) report.constant = false;
        if (cur <= next) report.strictly_decreasing = false;
    }
    return report;
}

std::vector<int> coefficient_parities(const Polynomial& poly) {
    bool even = false, odd = false;
    for (int i = 0; i <= poly.degree(); ++i)
        if (poly.coeff(i) != 0) (i % 2 == 0 ? even : odd) = true;
    std::vector<int> parities;
    if (even) parities.push_back(0);
    if (odd) parities.push_back(1);
    return parities;
}

bool parity_check(int d) {
    EhkFunction f = ehk_function(d);
    auto pure = [&](const Polynomial& poly) {
        auto parities = coefficient_parities(poly);
        return parities.size() == 1 && parities.front() == d % 2;
    };
    return pure(f.unreduced_num) && pure(f.unreduced_den);
}

EhrhartCoeffReport ehrhart_coeff_check(int d) {
    if (d < 3) throw std::invalid_argument("coefficient check needs d >= 3");
    std::vector<std::pair<Rational, Rational>> points;
    for (long k = 0; k <= d; ++k)
        points.emplace_back(Rational(k), Rational(count_fibonacci(d, k)));
    Polynomial P = interpolate(points);

    Integer Ed = zigzag(d).back();
    Integer swap_second = coeff_sum_binom(d, 2);

    EhrhartCoeffReport report;
    report.d = d;
    report.leading_ok =
        P.coeff(d) == make_rational(Ed, factorial(static_cast<unsigned long>(d)));
    report.second_ok =
        P.coeff(d - 1) ==
        make_rational(3 * Ed, 2 * factorial(static_cast<unsigned long>(d - 1)));
    Rational third = make_rational(Ed * (-3 * d * d + 17 * d + 2) + 24 * swap_second,
                                   24 * factorial(static_cast<unsigned long>(d - 2)));
    report.third_ok = P.coeff(d - 2) == third;

    Polynomial shifted = compose(P, Polynomial({make_rational(-3, 2), Rational(1)}));  // x - 3/2
    report.shift_kills_second = shifted.coeff(d - 1) == 0;
    Rational shifted_third = make_rational(Ed * (-3 * d * d + 17 * d - 25) + 24 * swap_second,
                                           24 * factorial(static_cast<unsigned long>(d - 2)));
    report.shifted_third_ok = shifted.coeff(d - 2) == shifted_third;
    return report;
}

}  // namespace hkq

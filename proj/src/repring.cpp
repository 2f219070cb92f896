#include "hkq/repring.hpp"

#include <stdexcept>
#include <string>

namespace hkq {

namespace {

void check_prime(long p) {
    if (!is_odd_prime(Integer(p)))
        throw std::invalid_argument("representation ring needs an odd prime, got " +
                                    std::to_string(p));
}

void check_same_ring(const GammaElement& u, const GammaElement& v) {
    if (u.p != v.p)
        throw std::invalid_argument("elements of different representation rings");
}

}  // namespace

GammaElement gamma_zero(long p) {
    check_prime(p);
    GammaElement e;
    e.p = p;
    e.coeffs.assign(static_cast<std::size_t>(p), Integer(0));
    return e;
}

GammaElement gamma_lambda(long p, long i) {
    GammaElement e = gamma_zero(p);
    if (i < 0 || i >= p)
        throw std::invalid_argument("lambda index out of range");
    e.coeffs[static_cast<std::size_t>(i)] = 1;
    return e;
}

GammaElement lambda_mul(long p, long i, long j) {
    check_prime(p);
    if (i < 0 || i >= p || j < 0 || j >= p)
        throw std::invalid_argument("lambda index out of range");
    if (i > j) std::swap(i, j);
    if (i + j >= p) {
        long ni = p - 1 - j, nj = p - 1 - i;
        i = ni;
        j = nj;  // one fold suffices: now i + j = 2p - 2 - (old sum) <= p - 2
    }
    GammaElement e = gamma_zero(p);
    for (long k = j - i; k <= j + i; ++k) e.coeffs[static_cast<std::size_t>(k)] = 1;
    return e;
}

GammaElement add(const GammaElement& u, const GammaElement& v) {
    check_same_ring(u, v);
    GammaElement e = u;
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) e.coeffs[k] += v.coeffs[k];
    return e;
}

GammaElement scale(const GammaElement& u, const Integer& c) {
    GammaElement e = u;
    for (auto& x : e.coeffs) x *= c;
    return e;
}

GammaElement multiply(const GammaElement& u, const GammaElement& v) {
    check_same_ring(u, v);
    const long p = u.p;
    // Each basis product contributes a contiguous window of ones; accumulate
    // u_i * v_j into a difference array and prefix-sum once at the end.
    std::vector<Integer> diff(static_cast<std::size_t>(p) + 1, Integer(0));
    for (long i = 0; i < p; ++i) {
        const Integer& ui = u.coeffs[static_cast<std::size_t>(i)];
        if (ui == 0) continue;
        for (long j = 0; j < p; ++j) {
            const Integer& vj = v.coeffs[static_cast<std::size_t>(j)];
            if (vj == 0) continue;
            long a = i, b = j;
            if (a > b) std::swap(a, b);
            if (a + b >= p) {
                long na = p - 1 - b, nb = p - 1 - a;
                a = na;
                b = nb;
            }
            Integer w = ui * vj;
            diff[static_cast<std::size_t>(b - a)] += w;
            diff[static_cast<std::size_t>(b + a) + 1] -= w;
        }
    }
    GammaElement e = gamma_zero(p);
    Integer run(0);
    for (long k = 0; k < p; ++k) {
        run += diff[static_cast<std::size_t>(k)];
        e.coeffs[static_cast<std::size_t>(k)] = run;
    }
    return e;
}

GammaElement power(const GammaElement& u, long exponent) {
    if (exponent < 1) throw std::invalid_argument("power needs exponent >= 1");
    GammaElement acc = u;
    for (long e = 1; e < exponent; ++e) acc = multiply(acc, u);
    return acc;
}

GammaElement delta(long p, long i) {
    check_prime(p);
    if (i < 1 || i > p)
        throw std::invalid_argument("delta index out of range");
    GammaElement e = gamma_zero(p);
    for (long k = 0; k < i; ++k)
        e.coeffs[static_cast<std::size_t>(k)] = (k % 2 == 0) ? 1 : -1;
    return e;
}

Integer coeff_D(const GammaElement& u) { return u.coeffs.empty() ? Integer(0) : u.coeffs[0]; }

std::vector<Integer> delta_coordinates(const GammaElement& u) {
    const long p = u.p;
    // lambda_i = (-1)^i (delta_{i+1} - delta_i) for i >= 1, lambda_0 = delta_1.
    std::vector<Integer> d(static_cast<std::size_t>(p), Integer(0));
    for (long k = 1; k <= p; ++k) {
        Integer value(0);
        if (k - 1 < p) {
            const Integer& prev = u.coeffs[static_cast<std::size_t>(k) - 1];
            value += (k % 2 == 1) ? prev : -prev;
        }
        if (k < p) {
            const Integer& cur = u.coeffs[static_cast<std::size_t>(k)];
            value += (k % 2 == 1) ? cur : -cur;
        }
        d[static_cast<std::size_t>(k) - 1] = value;
    }
    return d;
}

std::vector<std::vector<Integer>> mult_matrix(const GammaElement& u) {
    const long p = u.p;
    std::vector<std::vector<Integer>> mat(static_cast<std::size_t>(p),
                                          std::vector<Integer>(static_cast<std::size_t>(p)));
    for (long j = 0; j < p; ++j) {
        GammaElement col = multiply(u, gamma_lambda(p, j));
        for (long i = 0; i < p; ++i)
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                col.coeffs[static_cast<std::size_t>(i)];
    }
    return mat;
}

Integer diag_colength(long p, const std::vector<long>& exponents) {
    check_prime(p);
    if (exponents.empty()) throw std::invalid_argument("need at least one exponent");
    GammaElement acc = gamma_lambda(p, 0);
    for (long n : exponents) {
        if (n < 2 || n > p)
            throw std::invalid_argument("general Frobenius powers out of scope");
        long a = p / n, r = p % n;
        GammaElement factor = scale(delta(p, a), Integer(n - r));
        if (r > 0) factor = add(factor, scale(delta(p, a + 1), Integer(r)));
        acc = multiply(acc, factor);
    }
    return coeff_D(acc);
}

Rational ehk_quadric_repring(long p, int d) {
    check_prime(p);
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    const long a = (p - 1) / 2;
    const long e = d + 1;

    Integer num_D = coeff_D(power(add(delta(p, a), delta(p, a + 1)), e));

    // delta_{a+1} - delta_a = (-1)^a lambda_a, so the signed denominator term
    // (-1)^{a(d+1)} D((delta_{a+1} - delta_a)^{d+1}) equals D(lambda_a^{d+1});
    // both are computed and must agree.
    Integer den_D = coeff_D(power(gamma_lambda(p, a), e));
    GammaElement diff = add(delta(p, a + 1), scale(delta(p, a), Integer(-1)));
    Integer signed_D = coeff_D(power(diff, e));
    if ((a * e) % 2 == 1) signed_D = -signed_D;
    if (signed_D != den_D)
        throw std::logic_error("sign identity for the denominator term failed");

    Integer pd = int_pow(Integer(p), static_cast<unsigned long>(d));
    Integer denominator = pd - den_D;
    if (denominator == 0)
        throw std::logic_error("vanishing denominator in the quadric formula");
    return Rational(1) + make_rational(num_D - pd, denominator);
}

}  // namespace hkq

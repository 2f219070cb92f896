#include "hkq/polytope.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hkq {

namespace {

void check_dim_dilation(int d, long k) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (k < 0) throw std::invalid_argument("dilation must be >= 0");
}

}  // namespace

Integer count_fibonacci(int d, long k) {
    check_dim_dilation(d, k);
    const std::size_t states = static_cast<std::size_t>(k) + 1;
    std::vector<Integer> f(states, Integer(1));
    std::vector<Integer> prefix(states + 1);
    for (int step = 1; step < d; ++step) {
        prefix[0] = 0;
        for (std::size_t v = 0; v < states; ++v) prefix[v + 1] = prefix[v] + f[v];
        for (std::size_t v = 0; v < states; ++v) f[v] = prefix[states - v];  // x_prev <= k - v
    }
    Integer total(0);
    for (const auto& v : f) total += v;
    return total;
}

Integer count_extended(int d, long k) {
    if (d <= 0) {
        if (d < -1) throw std::invalid_argument("extended polytope defined for d >= -1");
        if (k < 0) throw std::invalid_argument("dilation must be >= 0");
        return 1;  // degenerate conventions |kE_0| = |kE_{-1}| = 1
    }
    check_dim_dilation(d, k);
    // States are |x| = 0..k; track the count with value exactly +-t via a
    // multiplicity-2 weight for t > 0.
    const std::size_t states = static_cast<std::size_t>(k) + 1;
    std::vector<Integer> f(states, Integer(1));  // f[t] = count with |x_i| = t, per sign
    // g[t] = total over values with |x| <= t (sign included)
    std::vector<Integer> cum(states + 1);
    for (int step = 1; step < d; ++step) {
        cum[0] = 0;
        for (std::size_t t = 0; t < states; ++t)
            cum[t + 1] = cum[t] + (t == 0 ? f[t] : 2 * f[t]);
        for (std::size_t t = 0; t < states; ++t) f[t] = cum[states - t];  // |x_prev| <= k - t
    }
    Integer total(0);
    for (std::size_t t = 0; t < states; ++t) total += (t == 0 ? f[t] : 2 * f[t]);
    return total;
}

Integer count_region(int d, const std::vector<Ineq>& pattern, long k) {
    check_dim_dilation(d, k);
    if (static_cast<int>(pattern.size()) != d - 1)
        throw std::invalid_argument("pattern length must be d - 1");
    const std::size_t states = static_cast<std::size_t>(k) + 1;
    std::vector<Integer> f(states, Integer(1));
    std::vector<Integer> prefix(states + 1);
    for (const Ineq ineq : pattern) {
        prefix[0] = 0;
        for (std::size_t v = 0; v < states; ++v) prefix[v + 1] = prefix[v] + f[v];
        for (std::size_t v = 0; v < states; ++v) {
            if (ineq == Ineq::Le)
                f[v] = prefix[states - v];                    // x_prev <= k - v
            else
                f[v] = prefix[states] - prefix[states - v - 1];  // x_prev >= k - v
        }
    }
    Integer total(0);
    for (const auto& v : f) total += v;
    return total;
}

Integer brute_force_count(const LatticeCountQuery& query, std::int64_t budget) {
    const int d = query.d;
    const long k = query.k;
    check_dim_dilation(d, k);
    const bool extended = query.family == PolytopeFamily::Extended;
    if (query.family == PolytopeFamily::Region &&
        static_cast<int>(query.pattern.size()) != d - 1)
        throw std::invalid_argument("pattern length must be d - 1");

    const long lo = extended ? -k : 0;
    const long hi = k;
    const long range = hi - lo + 1;
    Integer tuples = int_pow(Integer(range), static_cast<unsigned long>(d));
    if (tuples > budget)
        throw std::invalid_argument("enumeration budget exceeded: " + tuples.get_str() +
                                    " tuples > " + std::to_string(budget));

    auto pair_ok = [&](int i, long a, long b) {
        switch (query.family) {
            case PolytopeFamily::Fibonacci: return a + b <= k;
            case PolytopeFamily::Extended: return labs(a) + labs(b) <= k;
            case PolytopeFamily::Region:
                return query.pattern[static_cast<std::size_t>(i)] == Ineq::Le ? a + b <= k
                                                                              : a + b >= k;
        }
        return false;
    };

    std::vector<long> x(static_cast<std::size_t>(d), lo);
    Integer count(0);
    for (;;) {
        bool ok = true;
        for (int i = 0; ok && i + 1 < d; ++i)
            ok = pair_ok(i, x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i) + 1]);
        if (ok) count += 1;
        int pos = d - 1;
        while (pos >= 0 && x[static_cast<std::size_t>(pos)] == hi) {
            x[static_cast<std::size_t>(pos)] = lo;
            --pos;
        }
        if (pos < 0) break;
        ++x[static_cast<std::size_t>(pos)];
    }
    return count;
}

Rational volume_of_region(int d, const std::vector<Ineq>& pattern) {
    if (static_cast<int>(pattern.size()) != d - 1)
        throw std::invalid_argument("pattern length must be d - 1");
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(static_cast<std::size_t>(d) + 1);
    for (long k = 0; k <= d; ++k)
        points.emplace_back(Rational(k), Rational(count_region(d, pattern, k)));
    return interpolate(points).coeff(d);
}

Integer extended_vertex_count(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    std::vector<Integer> v{Integer(2), Integer(4), Integer(6)};
    if (d <= 3) return v[static_cast<std::size_t>(d) - 1];
    for (int i = 4; i <= d; ++i) {
        Integer next = 2 * v[static_cast<std::size_t>(i) - 3] + 2 * v[static_cast<std::size_t>(i) - 4];
        v.push_back(next);
    }
    return v.back();
}

Integer extended_vertex_count_by_enumeration(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    Integer count(0);
    std::vector<int> w(static_cast<std::size_t>(d), -1);
    for (;;) {
        bool ok = true;
        for (int i = 0; ok && i + 1 < d; ++i)
            ok = !(w[static_cast<std::size_t>(i)] != 0 && w[static_cast<std::size_t>(i) + 1] != 0);
        // no "00" prefix/suffix and no "000"
        if (ok && d >= 2) ok = !(w[0] == 0 && w[1] == 0) && !(w[static_cast<std::size_t>(d) - 2] == 0 &&
                                                              w[static_cast<std::size_t>(d) - 1] == 0);
        if (ok && d == 1) ok = (w[0] != 0);
        for (int i = 0; ok && i + 2 < d; ++i)
            ok = !(w[static_cast<std::size_t>(i)] == 0 && w[static_cast<std::size_t>(i) + 1] == 0 &&
                   w[static_cast<std::size_t>(i) + 2] == 0);
        if (ok) count += 1;
        int pos = d - 1;
        while (pos >= 0 && w[static_cast<std::size_t>(pos)] == 1) {
            w[static_cast<std::size_t>(pos)] = -1;
            --pos;
        }
        if (pos < 0) break;
        ++w[static_cast<std::size_t>(pos)];
    }
    return count;
}

}  // namespace hkq

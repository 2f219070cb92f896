#include "hkq/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hkq {

std::vector<Integer> zigzag(int n_max) {
    if (n_max < 0) throw std::invalid_argument("zigzag needs n_max >= 0");
    std::vector<Integer> e;
    e.reserve(static_cast<std::size_t>(n_max) + 1);
    e.emplace_back(1);
    std::vector<Integer> row{Integer(1)};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Integer> next(static_cast<std::size_t>(n) + 1);
        next[0] = 0;
        for (int i = 0; i < n; ++i)
            next[static_cast<std::size_t>(i) + 1] =
                next[static_cast<std::size_t>(i)] + row[static_cast<std::size_t>(n - 1 - i)];
        row = std::move(next);
        e.push_back(row.back());
    }
    return e;
}

namespace {

// Visit every alternating (down-up) permutation of [n]; `leaf` receives the
// value-at-position array. Backtracking over prefixes keeps the work close
// to E_n rather than n!.
template <typename F>
void visit_alternating(int n, F&& leaf) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            leaf(perm);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (k > 0) {
                int prev = perm[static_cast<std::size_t>(k) - 1];
                bool descend = (k % 2 == 1);  // position k+1 follows a descent at odd k
                if (descend ? !(prev > v) : !(prev < v)) continue;
            }
            used[static_cast<std::size_t>(v)] = true;
            perm[static_cast<std::size_t>(k)] = v;
            self(self, k + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(rec, 0);
}

}  // namespace

Integer count_alternating_by_enumeration(int n) {
    if (n == 0) return 1;
    Integer count(0);
    visit_alternating(n, [&](const std::vector<int>&) { count += 1; });
    return count;
}

Integer SwapTable::total() const {
    Integer t(0);
    for (const auto& v : s) t += v;
    return t;
}

Integer SwapTable::weighted_sum(long power) const {
    Integer t(0);
    for (std::size_t m = 0; m < s.size(); ++m) {
        Integer w(1);
        for (long q = 0; q < power; ++q) w *= static_cast<long>(m);
        t += w * s[m];
    }
    return t;
}

SwapTable swap_table(int d, int cap) {
    if (d < 1) throw std::invalid_argument("swap table needs d >= 1");
    if (d > cap)
        throw std::invalid_argument("swap table dimension " + std::to_string(d) +
                                    " exceeds enumeration cap " + std::to_string(cap));
    SwapTable table;
    table.d = d;
    if (d == 1) return table;  // empty histogram, single empty-swap permutation
    table.s.assign(static_cast<std::size_t>(d) - 1, Integer(0));
    std::vector<int> pos(static_cast<std::size_t>(d) + 1, 0);
    visit_alternating(d, [&](const std::vector<int>& perm) {
        for (int i = 0; i < d; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        int sw = 0;
        for (int v = 1; v < d; ++v)
            if (pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(v) + 1] - 1) ++sw;
        table.s[static_cast<std::size_t>(sw)] += 1;
    });
    return table;
}

Integer coeff_sum_binom(int d, int i, int cap) {
    SwapTable t = swap_table(d, cap);
    Integer sum(0);
    for (std::size_t m = 0; m < t.s.size(); ++m)
        sum += binomial(static_cast<long>(m), i) * t.s[m];
    // d = 1 has an empty histogram but one (empty) alternating permutation
    if (d == 1 && i == 0) return 1;
    return sum;
}

Integer kreweras_u(int n, int r, int cap) {
    if (n < 1) throw std::invalid_argument("kreweras_u needs n >= 1");
    if (n > cap)
        throw std::invalid_argument("kreweras_u size " + std::to_string(n) +
                                    " exceeds enumeration cap " + std::to_string(cap));
    if (r < 1 || r > n) return 0;
    Integer count(0);
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    // DFS over alternating maps; prune when the remaining positions cannot
    // cover the values still missing from the image.
    auto rec = [&](auto&& self, int k, int used_mask, int used_count) -> void {
        if (n - k < r - used_count) return;
        if (k == n) {
            if (used_count == r) count += 1;
            return;
        }
        for (int v = 1; v <= r; ++v) {
            if (k > 0) {
                int prev = f[static_cast<std::size_t>(k) - 1];
                bool descend = (k % 2 == 1);
                if (descend ? !(prev > v) : !(prev < v)) continue;
            }
            int bit = 1 << v;
            f[static_cast<std::size_t>(k)] = v;
            self(self, k + 1, used_mask | bit, used_count + ((used_mask & bit) ? 0 : 1));
        }
    };
    rec(rec, 0, 0, 0);
    return count;
}

AltDescentTable alt_descent_table(int n, int cap) {
    if (n < 1) throw std::invalid_argument("alt_descent_table needs n >= 1");
    if (n > cap)
        throw std::invalid_argument("alt_descent_table size " + std::to_string(n) +
                                    " exceeds enumeration cap " + std::to_string(cap));
    AltDescentTable table;
    table.n = n;
    table.a.assign(static_cast<std::size_t>(n), Integer(0));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int k = 0;
        for (int i = 0; i + 1 < n; ++i) {
            bool odd = (i % 2 == 0);  // 1-based position i+1
            if (odd ? perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i) + 1]
                    : perm[static_cast<std::size_t>(i)] < perm[static_cast<std::size_t>(i) + 1])
                ++k;
        }
        table.a[static_cast<std::size_t>(k)] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return table;
}

Polynomial alt_eulerian_poly(int n, int cap) {
    AltDescentTable t = alt_descent_table(n, cap);
    std::vector<Rational> coeffs;
    coeffs.reserve(t.a.size());
    for (const auto& v : t.a) coeffs.emplace_back(v);
    return Polynomial(std::move(coeffs));
}

std::vector<Sd1ProbeRow> sd1_recursion_probe(int d_min, int d_max, int cap) {
    auto s1 = [&](int d) -> Integer {
        SwapTable t = swap_table(d, cap);
        return t.s.size() > 1 ? t.s[1] : Integer(0);
    };
    std::vector<Sd1ProbeRow> rows;
    for (int d = d_min; d <= d_max; ++d) {
        Sd1ProbeRow row;
        row.d = d;
        row.lhs = s1(d + 1);
        row.rhs = s1(d) + s1(d - 1) + (d - 1);
        row.holds = (row.lhs == row.rhs);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Sec34ProbeRow> sec34_probe(int n_min, int n_max, int cap) {
    std::vector<Sec34ProbeRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        Sec34ProbeRow row;
        row.n = n;
        row.u_n_minus_2 = coeff_sum_binom(n, 2, cap);
        row.u_n = swap_table(n, cap).total();
        if (n == 1) row.u_n = 1;
        row.quantity = make_rational(24 * row.u_n_minus_2, row.u_n) -
                       Rational(3 * n * n - 17 * n + 25);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hkq

#include "hkq/matrices.hpp"

#include "hkq/repring.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hkq {

StructuredMatrixSpec StructuredMatrixSpec::T(long a) { return Q(Integer(2), a); }

StructuredMatrixSpec StructuredMatrixSpec::N(long a) { return Q(Integer(0), a); }

StructuredMatrixSpec StructuredMatrixSpec::Z(long a) {
    if (a < 1) throw std::invalid_argument("half-size must be >= 1");
    StructuredMatrixSpec s;
    s.kind = MatrixKind::Z;
    s.a_or_k = a;
    return s;
}

StructuredMatrixSpec StructuredMatrixSpec::Q(const Integer& q, long k) {
    if (k < 1) throw std::invalid_argument("half-size must be >= 1");
    StructuredMatrixSpec s;
    s.kind = (q == 2) ? MatrixKind::T : (q == 0 ? MatrixKind::N : MatrixKind::Q);
    s.a_or_k = k;
    s.q = q;
    return s;
}

StructuredMatrixSpec StructuredMatrixSpec::M(long n, long p) {
    if (n < 2 || n > p) throw std::invalid_argument("general Frobenius powers out of scope");
    StructuredMatrixSpec s;
    s.kind = MatrixKind::M;
    s.n = n;
    s.p = p;
    return s;
}

long StructuredMatrixSpec::size() const {
    return kind == MatrixKind::M ? p : 2 * a_or_k + 1;
}

namespace {

GammaElement hanmonsky_factor(long p, long n) {
    long a = p / n, r = p % n;
    GammaElement factor = scale(delta(p, a), Integer(n - r));
    if (r > 0) factor = add(factor, scale(delta(p, a + 1), Integer(r)));
    return factor;
}

std::vector<std::vector<Integer>> abs_mult_matrix(long p, long n) {
    auto mat = mult_matrix(hanmonsky_factor(p, n));
    for (auto& row : mat)
        for (auto& v : row) v = abs(v);
    return mat;
}

}  // namespace

Integer entry(const StructuredMatrixSpec& spec, long i, long j) {
    const long size = spec.size();
    if (i < 1 || i > size || j < 1 || j > size)
        throw std::invalid_argument("matrix index out of range");
    if (spec.kind == MatrixKind::M)
        return abs_mult_matrix(spec.p, spec.n)[static_cast<std::size_t>(i) - 1]
                                              [static_cast<std::size_t>(j) - 1];
    const long a = spec.a_or_k;
    const long c = a + 1;
    const long rhombus = std::labs(i - c) + std::labs(j - c);
    switch (spec.kind) {
        case MatrixKind::Z:
            return rhombus >= a + 1 ? Integer(1) : Integer(0);
        case MatrixKind::T:
        case MatrixKind::N:
        case MatrixKind::Q:
            if (i + j <= a + 1 || i + j >= 3 * a + 3) return spec.q;
            if (rhombus <= a) return Integer(1);
            return Integer(0);
        case MatrixKind::M:
            break;
    }
    throw std::logic_error("unreachable matrix kind");
}

std::vector<std::vector<Integer>> dense_matrix(const StructuredMatrixSpec& spec) {
    if (spec.kind == MatrixKind::M) return abs_mult_matrix(spec.p, spec.n);
    const long size = spec.size();
    std::vector<std::vector<Integer>> mat(static_cast<std::size_t>(size),
                                          std::vector<Integer>(static_cast<std::size_t>(size)));
    for (long i = 1; i <= size; ++i)
        for (long j = 1; j <= size; ++j)
            mat[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] =
                entry(spec, i, j);
    return mat;
}

namespace {

// One banded matrix-vector product using prefix sums of v. Row i of Q(q,a)
// reads q times a corner range plus a rhombus range; Z reads the two ranges
// outside the open rhombus.
std::vector<Integer> banded_apply(const StructuredMatrixSpec& spec,
                                  const std::vector<Integer>& v) {
    const long size = spec.size();
    const long a = spec.a_or_k;
    const long c = a + 1;
    std::vector<Integer> prefix(static_cast<std::size_t>(size) + 1);
    prefix[0] = 0;
    for (long t = 0; t < size; ++t)
        prefix[static_cast<std::size_t>(t) + 1] = prefix[static_cast<std::size_t>(t)] +
                                                  v[static_cast<std::size_t>(t)];
    // sum of v over 1-based columns [lo, hi]
    auto range_sum = [&](long lo, long hi) -> Integer {
        if (lo < 1) lo = 1;
        if (hi > size) hi = size;
        if (lo > hi) return Integer(0);
        return prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo) - 1];
    };
    std::vector<Integer> out(static_cast<std::size_t>(size));
    for (long i = 1; i <= size; ++i) {
        const long half = std::labs(i - c);
        Integer acc(0);
        if (spec.kind == MatrixKind::Z) {
            acc = range_sum(1, c - (a + 1 - half)) + range_sum(c + (a + 1 - half), size);
        } else {
            acc = range_sum(c - (a - half), c + (a - half));  // rhombus band
            if (spec.q != 0) {
                Integer corners = range_sum(1, a + 1 - i) + range_sum(3 * a + 3 - i, size);
                acc += spec.q * corners;
            }
        }
        out[static_cast<std::size_t>(i) - 1] = acc;
    }
    return out;
}

std::vector<Integer> dense_apply(const std::vector<std::vector<Integer>>& mat,
                                 const std::vector<Integer>& v) {
    const std::size_t size = mat.size();
    std::vector<Integer> out(size, Integer(0));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (mat[i][j] != 0 && v[j] != 0) out[i] += mat[i][j] * v[j];
    return out;
}

}  // namespace

Integer corner_power(const StructuredMatrixSpec& spec, long exponent) {
    if (exponent < 1) throw std::invalid_argument("power needs exponent >= 1");
    std::vector<Integer> v(static_cast<std::size_t>(spec.size()), Integer(0));
    v[0] = 1;
    if (spec.kind == MatrixKind::M) {
        auto mat = abs_mult_matrix(spec.p, spec.n);
        for (long e = 0; e < exponent; ++e) v = dense_apply(mat, v);
    } else {
        for (long e = 0; e < exponent; ++e) v = banded_apply(spec, v);
    }
    return v[0];
}

Integer hanmonsky_colength_matrix(long p, const std::vector<long>& exponents) {
    if (exponents.empty()) throw std::invalid_argument("need at least one exponent");
    for (long n : exponents)
        if (n < 2 || n > p) throw std::invalid_argument("general Frobenius powers out of scope");
    std::vector<Integer> v(static_cast<std::size_t>(p), Integer(0));
    v[0] = 1;
    // apply rightmost factor first so v ends up as the first column of the product
    for (auto it = exponents.rbegin(); it != exponents.rend(); ++it)
        v = dense_apply(abs_mult_matrix(p, *it), v);
    return v[0];
}

}  // namespace hkq

#pragma once

// Symbolic entry rules for the banded square matrices used by the quadric
// formulas, and (1,1) entries of their powers. With size 2a+1 and center
// c = a+1:
//
//   Q(q,a): q on the two triangular corners i+j <= a+1 and i+j >= 3a+3,
//           1 on the rhombus |i-c| + |j-c| <= a, 0 elsewhere.
//   T_a = Q(2,a), N_a = Q(0,a).
//   Z_a:    1 outside the open rhombus, i.e. where |i-c| + |j-c| >= a+1.
//   M(n,p): entrywise absolute value of the multiplication matrix of
//           (n-r) delta_a + r delta_{a+1} in the representation ring,
//           where p = a n + r (size p).
//
// Powers never materialize matrix products: the power is applied to the
// first standard basis vector one matrix-vector product at a time, and the
// banded families use prefix sums so a product costs O(size) big-integer
// operations.

#include "hkq/rational.hpp"

#include <vector>

namespace hkq {

enum class MatrixKind : std::uint8_t { T, N, Z, Q, M };

struct StructuredMatrixSpec {
    MatrixKind kind = MatrixKind::T;
    long a_or_k = 1;   // half-size for T/N/Z/Q (size 2a+1)
    Integer q = 0;     // Q only
    long n = 0;        // M only
    long p = 0;        // M only (odd prime, size p)

    static StructuredMatrixSpec T(long a);
    static StructuredMatrixSpec N(long a);
    static StructuredMatrixSpec Z(long a);
    static StructuredMatrixSpec Q(const Integer& q, long k);
    static StructuredMatrixSpec M(long n, long p);

    long size() const;
};

// Entry at 1-based (i, j).
Integer entry(const StructuredMatrixSpec& spec, long i, long j);

// Whole matrix, for tests and golden comparisons.
std::vector<std::vector<Integer>> dense_matrix(const StructuredMatrixSpec& spec);

// (1,1) entry of spec^exponent, exponent >= 1.
Integer corner_power(const StructuredMatrixSpec& spec, long exponent);

// (1,1) entry of M_{n_0} M_{n_1} ... M_{n_d}; equals diag_colength.
Integer hanmonsky_colength_matrix(long p, const std::vector<long>& exponents);

}  // namespace hkq

#pragma once

// The representation ring Gamma for an odd prime p, in the lambda basis
// lambda_0..lambda_{p-1}. Products of basis elements follow
//   lambda_i * lambda_j = lambda_{j-i} + ... + lambda_{j+i}        (i <= j, i+j <= p-1)
//   lambda_i * lambda_j = lambda_{p-1-j} * lambda_{p-1-i}          (i+j >= p)
// extended to i = j by the same window formula. delta_i is the alternating
// partial sum of lambdas, and D extracts the lambda_0 coefficient.

#include "hkq/rational.hpp"

#include <vector>

namespace hkq {

struct GammaElement {
    long p = 0;                   // odd prime
    std::vector<Integer> coeffs;  // length exactly p, coefficient of lambda_i

    bool operator==(const GammaElement& o) const { return p == o.p && coeffs == o.coeffs; }
};

GammaElement gamma_zero(long p);
GammaElement gamma_lambda(long p, long i);  // the basis element lambda_i

// lambda_i * lambda_j as an element.
GammaElement lambda_mul(long p, long i, long j);

GammaElement multiply(const GammaElement& u, const GammaElement& v);
GammaElement add(const GammaElement& u, const GammaElement& v);
GammaElement scale(const GammaElement& u, const Integer& c);
GammaElement power(const GammaElement& u, long exponent);

// delta_i = lambda_0 - lambda_1 + ... + (-1)^{i-1} lambda_{i-1}, 1 <= i <= p.
GammaElement delta(long p, long i);

// Coefficient at lambda_0.
Integer coeff_D(const GammaElement& u);

// Coordinates in the delta basis (delta_1..delta_p); exact inverse of the
// alternating-sum change of basis.
std::vector<Integer> delta_coordinates(const GammaElement& u);

// mat[i][j] = coefficient of lambda_i in u * lambda_j (p x p).
std::vector<std::vector<Integer>> mult_matrix(const GammaElement& u);

// dim of k[[x_0..x_d]]/(x_0^{n_0}+...+x_d^{n_d}) modulo (x_i^p): D of the
// product of the factors (n_i - r_i) delta_{a_i} + r_i delta_{a_i+1} with
// p = a_i n_i + r_i. Only first Frobenius powers with 2 <= n_i <= p are in
// scope, which keeps every lambda index below p.
Integer diag_colength(long p, const std::vector<long>& exponents);

// Hilbert-Kunz multiplicity of the quadric x_0^2 + ... + x_d^2 over a field
// of characteristic p, through the representation ring.
Rational ehk_quadric_repring(long p, int d);

}  // namespace hkq

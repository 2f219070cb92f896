#pragma once

// Exact lattice-point counts for dilations of the Fibonacci polytope F_d
// (0 <= x_i <= k, x_i + x_{i+1} <= k), the extended Fibonacci polytope E_d
// (|x_i| <= k, |x_i| + |x_{i+1}| <= k) and the sign-pattern regions cut out
// of the cube by the hyperplanes x_i + x_{i+1} = k. Counting is a transfer
// DP over the last coordinate with prefix-sum transitions, O(d*k) big-integer
// additions; a direct enumeration oracle cross-checks it.

#include "hkq/polynomial.hpp"
#include "hkq/rational.hpp"

#include <cstdint>
#include <vector>

namespace hkq {

enum class Ineq : std::uint8_t { Le, Ge };

enum class PolytopeFamily : std::uint8_t { Fibonacci, Extended, Region };

struct LatticeCountQuery {
    PolytopeFamily family = PolytopeFamily::Fibonacci;
    int d = 1;
    long k = 0;
    std::vector<Ineq> pattern;  // region family only; length d-1
};

inline constexpr std::int64_t kBruteForceBudget = 100'000'000;

// |kF_d| for d >= 1, k >= 0.
Integer count_fibonacci(int d, long k);

// |kE_d|; the degenerate dimensions are fixed as |kE_0| = |kE_{-1}| = 1,
// which is what makes the matrix identities below uniform in d.
Integer count_extended(int d, long k);

// Integer points of {x in [0,k]^d : x_i + x_{i+1} >= k or <= k per pattern}.
// Regions are closed; pattern length must be d-1.
Integer count_region(int d, const std::vector<Ineq>& pattern, long k);

// Direct enumeration over all candidate tuples. Throws when the tuple count
// exceeds the budget.
Integer brute_force_count(const LatticeCountQuery& query,
                          std::int64_t budget = kBruteForceBudget);

// Euclidean volume of the closed region: leading coefficient of the degree-d
// polynomial interpolated through the counts at k = 0..d.
Rational volume_of_region(int d, const std::vector<Ineq>& pattern);

// Vertex count of the extended Fibonacci polytope:
// v(d) = 2 v(d-2) + 2 v(d-3), v(1) = 2, v(2) = 4, v(3) = 6.
Integer extended_vertex_count(int d);

// Oracle for the vertex recurrence: vertices are words over {-1, 0, 1} with
// no two adjacent nonzeros, not starting or ending with "00" and with no
// "000" anywhere.
Integer extended_vertex_count_by_enumeration(int d);

}  // namespace hkq

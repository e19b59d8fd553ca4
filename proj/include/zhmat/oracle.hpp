#pragma once

#include <cstdint>
#include <vector>

#include "zhmat/matrix.hpp"
#include "zhmat/ring.hpp"
#include "zhmat/smith.hpp"

// Brute-force reference computations. Nothing here calls the elimination
// kernels or the clique solver they are used to check.
namespace zhmat::oracle {

inline constexpr std::uint64_t kDefaultFactorizationBudget = 5'000'000;

/// Invariant factors from determinantal divisors. For each prime power
/// q = p^s the integer matrix [A | q I] (canonical lifts, m <= n after
/// transposing) has k-th determinantal divisor with p-adic valuation
/// alpha_1 + ... + alpha_k; the exponents are recovered by differencing.
/// Needs min(m, n) <= 4 and h < 2^20.
InvariantFactors omega_via_minors(const Ring &ring, const Mat &a);

/// Smallest r for which an exhaustive search finds A = B * C with B m x r and
/// C r x n. Throws BudgetExceeded when h^{(m+n) r} exceeds the budget for an r
/// that has to be searched.
std::size_t inner_rank_by_factorization(const Ring &ring, const Mat &a,
                                        std::uint64_t budget = kDefaultFactorizationBudget);

/// Matrix indices of every product B * C with B m x r, C r x n; sorted,
/// distinct. These are exactly the matrices of inner rank <= r.
std::vector<std::uint64_t> products_through(const Ring &ring, std::size_t m, std::size_t n,
                                            std::size_t r,
                                            std::uint64_t budget = kDefaultFactorizationBudget);

using AdjacencyMatrix = std::vector<std::vector<bool>>;

/// A maximum clique, by plain branch and bound with a greedy colouring bound.
/// Needs at most 256 vertices.
std::vector<std::size_t> exact_clique(const AdjacencyMatrix &adj);
/// A maximum independent set (maximum clique of the complement).
std::vector<std::size_t> exact_mis(const AdjacencyMatrix &adj);

} // namespace zhmat::oracle

#pragma once

#include <vector>

#include "zhmat/matrix.hpp"
#include "zhmat/ring.hpp"

namespace zhmat {

/// Exponent table: rows[i][c] is the exponent of p_i in the c-th invariant
/// factor, for c < min(m, n). Each row is nondecreasing and bounded by s_i.
struct InvariantFactors {
  std::vector<std::vector<unsigned>> rows;

  friend auto operator<=>(const InvariantFactors &, const InvariantFactors &) = default;
  friend bool operator==(const InvariantFactors &, const InvariantFactors &) = default;
};

/// A = S * D * T over Z_{p^s}, D = diag(p^{exponents[c]}).
struct LocalSmithForm {
  Mat S, D, T;
  std::vector<unsigned> exponents;
};

/// A = S * D * T over Z_h with D_cc = prod_i p_i^{omega.rows[i][c]}.
struct SmithForm {
  Mat S, D, T;
  InvariantFactors omega;
};

/// Smith form over the local ring Z_{p^s} (a.modulus() == p^s). Pivots are
/// entries of minimal p-adic valuation, ties broken by the first (row, col) in
/// row-major order; the pivot's unit part is moved into S.
LocalSmithForm snf_prime_power(const Mat &a, std::uint64_t p, unsigned s);
/// Exponents only, no transforms.
std::vector<unsigned> local_exponents(const Mat &a, std::uint64_t p, unsigned s);

/// Smith form over Z_h assembled from the per-prime forms by CRT. Matrices
/// with m > n are handled through the transpose.
SmithForm snf(const Ring &ring, const Mat &a);
InvariantFactors invariant_factors(const Ring &ring, const Mat &a);
bool is_well_formed(const Ring &ring, const InvariantFactors &omega);

/// Number of invariant factors that are nonzero in Z_h.
std::size_t inner_rank(const Ring &ring, const Mat &a);
std::size_t inner_rank(const Ring &ring, const InvariantFactors &omega);

struct ProjectedRanks {
  std::size_t via_pi;    // max over i of the inner rank of A mod p_i^{s_i}
  std::size_t via_theta; // max over i of the inner rank of A mod h / p_i^{s_i}
  bool operator==(const ProjectedRanks &) const = default;
};

/// For t = 1 the coprojections are trivial and via_theta is reported as via_pi.
ProjectedRanks rank_via_projections(const Ring &ring, const Mat &a);

} // namespace zhmat

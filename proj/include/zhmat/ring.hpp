#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zhmat {

/// Canonical residue in [0, h).
using Residue = std::uint64_t;

/// Largest supported modulus. Products of two residues are formed in 128 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

struct PrimePower {
  std::uint64_t p;
  unsigned s;
  std::uint64_t q; // p^s
  bool operator==(const PrimePower &) const = default;
};

/// x = unit * prod p_i^{exponents_i}. For x = 0, is_zero is set and the
/// exponents are (s_1, ..., s_t); the unit is then 1.
struct ElemFactorization {
  Residue unit;
  std::vector<unsigned> exponents;
  bool is_zero;
  bool operator==(const ElemFactorization &) const = default;
};

/// The principal ideal generated by prod p_i^{exponents_i}.
struct IdealLabel {
  std::vector<unsigned> exponents;
  bool operator==(const IdealLabel &) const = default;
};

/// The residue class ring Z_h with h factored into prime powers sorted by
/// ascending prime. Component indices are 0-based throughout the library.
class Ring {
public:
  /// Factors h by trial division. Throws UsageError for h < 2 or h > kMaxModulus.
  explicit Ring(std::uint64_t h);

  std::uint64_t modulus() const { return h_; }
  std::size_t component_count() const { return comps_.size(); }
  const std::vector<PrimePower> &components() const { return comps_; }
  const PrimePower &component(std::size_t i) const;
  /// h / p_i^{s_i}; 1 when t = 1.
  std::uint64_t comodulus(std::size_t i) const;
  std::vector<unsigned> saturated_exponents() const;

  Residue reduce(std::uint64_t x) const { return x % h_; }
  Residue reduce_signed(std::int64_t x) const;
  Residue add(Residue a, Residue b) const;
  Residue sub(Residue a, Residue b) const;
  Residue neg(Residue a) const { return a == 0 ? 0 : h_ - a; }
  Residue mul(Residue a, Residue b) const;
  Residue pow(Residue a, std::uint64_t e) const;

  bool is_unit(Residue x) const;
  std::optional<Residue> inverse(Residue x) const;
  /// |Z_h^*| = h * prod (1 - 1/p_i).
  std::uint64_t unit_count() const;

  ElemFactorization factor_element(Residue x) const;
  /// Given beta with some beta_j < s_j, returns (u, alpha) with alpha_i =
  /// min(beta_i, s_i) and u * prod p^beta = prod p^alpha. Throws UsageError
  /// when prod p^beta is zero in Z_h.
  std::pair<Residue, std::vector<unsigned>>
  absorb_saturated_exponents(std::span<const unsigned> beta) const;
  bool are_associates(Residue a, Residue b) const;

  /// prod p_i^{exponents_i} mod h.
  Residue prime_product(std::span<const unsigned> exponents) const;
  IdealLabel ideal_of(Residue x) const;
  bool in_ideal(Residue y, const IdealLabel &ideal) const;
  /// Members of the ideal in increasing order.
  std::vector<Residue> ideal_elements(const IdealLabel &ideal) const;

  Residue project(Residue x, std::size_t i) const;
  Residue coproject(Residue x, std::size_t i) const;
  /// The unique x with x = residues[i] mod p_i^{s_i} for every i.
  Residue crt_lift(std::span<const Residue> residues) const;

  bool operator==(const Ring &o) const { return h_ == o.h_; }

private:
  std::uint64_t h_;
  std::vector<PrimePower> comps_;
  std::vector<Residue> idempotents_; // e_i = 1 mod q_i, 0 mod q_j
};

/// p-adic valuation of a positive integer; v(0) is reported as `cap`.
unsigned valuation(std::uint64_t x, std::uint64_t p, unsigned cap);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t mod);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

} // namespace zhmat

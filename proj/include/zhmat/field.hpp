#pragma once

#include <cstdint>
#include <vector>

namespace zhmat {

/// Polynomial over F_p, coefficients from the constant term up.
using Poly = std::vector<std::uint64_t>;

/// F_{p^n} = F_p[x] / (modulus), modulus monic irreducible of degree n.
struct FieldSpec {
  std::uint64_t p;
  std::size_t n;
  Poly modulus; // n + 1 coefficients, last one 1
};

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(std::uint64_t p, const Poly &f);

/// The monic irreducible of degree n whose lower coefficients (c_0, ...,
/// c_{n-1}), read as a base-p integer with c_0 least significant, are smallest.
FieldSpec least_irreducible_field(std::uint64_t p, std::size_t n);

/// Arithmetic on coefficient vectors of length n.
class GaloisField {
public:
  explicit GaloisField(FieldSpec spec);

  const FieldSpec &spec() const { return spec_; }
  std::size_t degree() const { return spec_.n; }

  Poly zero() const { return Poly(spec_.n, 0); }
  Poly one() const;
  /// x^k reduced.
  Poly monomial(std::size_t k) const;
  Poly add(const Poly &a, const Poly &b) const;
  Poly mul(const Poly &a, const Poly &b) const;
  /// a^(p^k).
  Poly frobenius(const Poly &a, std::size_t k) const;

private:
  FieldSpec spec_;
};

} // namespace zhmat

#include "zhmat/field.hpp"

#include <utility>

#include "zhmat/error.hpp"
#include "zhmat/ring.hpp"

namespace zhmat {

namespace {

void trim(Poly &f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

// Remainder of f modulo monic g over F_p.
Poly poly_mod(Poly f, const Poly &g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t k = 0; k <= dg; ++k)
      f[shift + k] = (f[shift + k] + p - mulmod(lead, g[k], p)) % p;
    trim(f);
  }
  return f;
}

} // namespace

bool is_irreducible(std::uint64_t p, const Poly &f) {
  Poly g = f;
  trim(g);
  if (g.size() < 2)
    return false;
  const std::size_t deg = g.size() - 1;
  if (g.back() != 1)
    throw UsageError("irreducibility test expects a monic polynomial");
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t k = 0; k < d; ++k, c /= p)
        divisor[k] = c % p;
      divisor[d] = 1;
      if (poly_mod(g, divisor, p).empty())
        return false;
    }
  }
  return true;
}

FieldSpec least_irreducible_field(std::uint64_t p, std::size_t n) {
  if (n == 0)
    throw UsageError("extension degree must be positive");
  const std::uint64_t count = ipow(p, static_cast<unsigned>(n));
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(n + 1, 0);
    std::uint64_t c = code;
    for (std::size_t k = 0; k < n; ++k, c /= p)
      f[k] = c % p;
    f[n] = 1;
    if (is_irreducible(p, f))
      return {p, n, f};
  }
  throw VerificationFailure("no irreducible polynomial found");
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
  if (spec_.modulus.size() != spec_.n + 1 || !is_irreducible(spec_.p, spec_.modulus))
    throw UsageError("field modulus must be monic irreducible of degree n");
}

Poly GaloisField::one() const {
  Poly r = zero();
  r[0] = 1 % spec_.p;
  return r;
}

Poly GaloisField::monomial(std::size_t k) const {
  Poly x = poly_mod({0, 1}, spec_.modulus, spec_.p);
  x.resize(spec_.n, 0);
  Poly r = one();
  for (std::size_t j = 0; j < k; ++j)
    r = mul(r, x);
  return r;
}

Poly GaloisField::add(const Poly &a, const Poly &b) const {
  Poly r(spec_.n);
  for (std::size_t k = 0; k < spec_.n; ++k)
    r[k] = (a[k] + b[k]) % spec_.p;
  return r;
}

Poly GaloisField::mul(const Poly &a, const Poly &b) const {
  const std::uint64_t p = spec_.p;
  Poly prod(2 * spec_.n, 0);
  for (std::size_t i = 0; i < spec_.n; ++i)
    for (std::size_t j = 0; j < spec_.n; ++j)
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
  Poly r = poly_mod(prod, spec_.modulus, p);
  r.resize(spec_.n, 0);
  return r;
}

Poly GaloisField::frobenius(const Poly &a, std::size_t k) const {
  Poly r = a;
  for (std::size_t j = 0; j < k; ++j) {
    Poly acc = one();
    for (std::uint64_t e = 0; e < spec_.p; ++e)
      acc = mul(acc, r);
    r = acc;
  }
  return r;
}

} // namespace zhmat

#include "zhmat/ring.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "zhmat/error.hpp"

namespace zhmat {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t mod) {
  if (mod == 1)
    return 0;
  __int128 r0 = mod, r1 = a % mod, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 != 1)
    return std::nullopt;
  if (t0 < 0)
    t0 += mod;
  return static_cast<std::uint64_t>(t0);
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

unsigned valuation(std::uint64_t x, std::uint64_t p, unsigned cap) {
  if (x == 0)
    return cap;
  unsigned v = 0;
  while (v < cap && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

namespace {

// x = r_k mod m_k for pairwise coprime moduli; returns x in [0, prod m_k).
std::uint64_t crt_general(std::span<const std::uint64_t> residues,
                          std::span<const std::uint64_t> moduli) {
  std::uint64_t x = 0, m = 1;
  for (std::size_t k = 0; k < residues.size(); ++k) {
    const std::uint64_t mk = moduli[k];
    if (mk == 1)
      continue;
    // x + m * y = r_k (mod mk)
    const std::uint64_t diff = (residues[k] % mk + mk - x % mk) % mk;
    const std::uint64_t y = mulmod(diff, *invmod(m % mk, mk), mk);
    x += m * y;
    m *= mk;
  }
  return x;
}

} // namespace

Ring::Ring(std::uint64_t h) : h_(h) {
  if (h < 2 || h > kMaxModulus)
    throw UsageError("modulus must lie in [2, 2^62], got " + std::to_string(h));
  std::uint64_t rest = h;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0)
      continue;
    unsigned s = 0;
    std::uint64_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
      ++s;
    }
    comps_.push_back({p, s, q});
  }
  if (rest > 1)
    comps_.push_back({rest, 1, rest});
  for (const auto &c : comps_) {
    const std::uint64_t co = h_ / c.q;
    idempotents_.push_back(mulmod(co, *invmod(co % c.q, c.q), h_));
  }
}

const PrimePower &Ring::component(std::size_t i) const {
  if (i >= comps_.size())
    throw UsageError("component index " + std::to_string(i) + " out of range");
  return comps_[i];
}

std::uint64_t Ring::comodulus(std::size_t i) const { return h_ / component(i).q; }

std::vector<unsigned> Ring::saturated_exponents() const {
  std::vector<unsigned> s;
  for (const auto &c : comps_)
    s.push_back(c.s);
  return s;
}

Residue Ring::reduce_signed(std::int64_t x) const {
  const auto hm = static_cast<std::int64_t>(h_);
  const std::int64_t r = x % hm;
  return static_cast<Residue>(r < 0 ? r + hm : r);
}

Residue Ring::add(Residue a, Residue b) const {
  const Residue s = a + b;
  return s >= h_ ? s - h_ : s;
}

Residue Ring::sub(Residue a, Residue b) const { return a >= b ? a - b : a + (h_ - b); }

Residue Ring::mul(Residue a, Residue b) const { return mulmod(a, b, h_); }

Residue Ring::pow(Residue a, std::uint64_t e) const {
  Residue r = 1 % h_;
  while (e > 0) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool Ring::is_unit(Residue x) const { return std::gcd(x, h_) == 1; }

std::optional<Residue> Ring::inverse(Residue x) const { return invmod(x, h_); }

std::uint64_t Ring::unit_count() const {
  std::uint64_t n = h_;
  for (const auto &c : comps_)
    n = n / c.p * (c.p - 1);
  return n;
}

Residue Ring::prime_product(std::span<const unsigned> exponents) const {
  if (exponents.size() != comps_.size())
    throw UsageError("exponent vector length does not match the ring");
  Residue r = 1;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    r = mul(r, pow(comps_[i].p, exponents[i]));
  return r;
}

namespace {

// Smallest unit u of Z_h with u * a = b, given that a and b are associates
// and not both zero.
Residue smallest_unit_between(const Ring &ring, Residue a, Residue b) {
  std::vector<std::uint64_t> targets, moduli;
  std::uint64_t step = 1;
  for (const auto &c : ring.components()) {
    const std::uint64_t ai = a % c.q, bi = b % c.q;
    const unsigned v = valuation(ai, c.p, c.s);
    if (v == c.s)
      continue;
    const std::uint64_t mod = ipow(c.p, c.s - v);
    const std::uint64_t pv = ipow(c.p, v);
    const std::uint64_t wa = (ai / pv) % mod, wb = (bi / pv) % mod;
    targets.push_back(mulmod(wb, *invmod(wa, mod), mod));
    moduli.push_back(mod);
    step *= mod;
  }
  for (Residue u = crt_general(targets, moduli); u < ring.modulus(); u += step)
    if (ring.is_unit(u))
      return u;
  throw VerificationFailure("no unit relates the given associates");
}

} // namespace

ElemFactorization Ring::factor_element(Residue x) const {
  x = reduce(x);
  ElemFactorization f{1 % h_, {}, x == 0};
  for (const auto &c : comps_)
    f.exponents.push_back(valuation(x % c.q, c.p, c.s));
  if (!f.is_zero)
    f.unit = smallest_unit_between(*this, prime_product(f.exponents), x);
  return f;
}

std::pair<Residue, std::vector<unsigned>>
Ring::absorb_saturated_exponents(std::span<const unsigned> beta) const {
  if (beta.size() != comps_.size())
    throw UsageError("exponent vector length does not match the ring");
  std::vector<unsigned> alpha;
  bool nonzero = false;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    alpha.push_back(std::min(beta[i], comps_[i].s));
    nonzero = nonzero || beta[i] < comps_[i].s;
  }
  if (!nonzero)
    throw UsageError("element is zero");
  Residue x = 1;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    x = mul(x, pow(comps_[i].p, beta[i]));
  return {smallest_unit_between(*this, x, prime_product(alpha)), alpha};
}

bool Ring::are_associates(Residue a, Residue b) const {
  return factor_element(a).exponents == factor_element(b).exponents;
}

IdealLabel Ring::ideal_of(Residue x) const {
  IdealLabel label;
  for (const auto &c : comps_)
    label.exponents.push_back(valuation(reduce(x) % c.q, c.p, c.s));
  return label;
}

bool Ring::in_ideal(Residue y, const IdealLabel &ideal) const {
  return reduce(y) % std::gcd(prime_product(ideal.exponents), h_) == 0;
}

std::vector<Residue> Ring::ideal_elements(const IdealLabel &ideal) const {
  const std::uint64_t d = std::gcd(prime_product(ideal.exponents), h_);
  std::vector<Residue> out;
  for (Residue y = 0; y < h_; y += d)
    out.push_back(y);
  return out;
}

Residue Ring::project(Residue x, std::size_t i) const { return x % component(i).q; }

Residue Ring::coproject(Residue x, std::size_t i) const { return x % comodulus(i); }

Residue Ring::crt_lift(std::span<const Residue> residues) const {
  if (residues.size() != comps_.size())
    throw UsageError("crt_lift needs one residue per prime component");
  Residue x = 0;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    x = add(x, mul(residues[i] % comps_[i].q, idempotents_[i]));
  return x;
}

} // namespace zhmat

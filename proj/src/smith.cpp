#include "zhmat/smith.hpp"

#include <algorithm>
#include <utility>

#include "zhmat/error.hpp"

namespace zhmat {

namespace {

using Grid = std::vector<std::vector<Residue>>;

Grid to_grid(const Mat &a) {
  Grid g(a.rows(), std::vector<Residue>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      g[i][j] = a(i, j);
  return g;
}

Mat from_grid(std::uint64_t q, const Grid &g) {
  Mat m(q, g.size(), g.front().size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j)
      m.set(i, j, g[i][j]);
  return m;
}

Grid identity_grid(std::size_t n) {
  Grid g(n, std::vector<Residue>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    g[i][i] = 1;
  return g;
}

// Diagonalizes `a` in place over Z_{p^s}, keeping A_orig = S * a * T when the
// transforms are requested.
class LocalEliminator {
public:
  LocalEliminator(const Mat &a, std::uint64_t p, unsigned s, bool track)
      : p_(p), s_(s), q_(a.modulus()), a_(to_grid(a)), track_(track) {
    if (track_) {
      S_ = identity_grid(a.rows());
      T_ = identity_grid(a.cols());
    }
  }

  std::vector<unsigned> run() {
    const std::size_t m = a_.size(), n = a_.front().size(), k_max = std::min(m, n);
    std::vector<unsigned> exps(k_max, s_);
    for (std::size_t k = 0; k < k_max; ++k) {
      std::size_t pr = k, pc = k;
      unsigned best = s_;
      for (std::size_t i = k; i < m && best > 0; ++i)
        for (std::size_t j = k; j < n; ++j) {
          const unsigned v = valuation(a_[i][j], p_, s_);
          if (v < best) {
            best = v, pr = i, pc = j;
            if (v == 0)
              break;
          }
        }
      if (best == s_)
        break;
      exps[k] = best;
      swap_rows(k, pr);
      swap_cols(k, pc);
      const std::uint64_t pv = ipow(p_, best);
      const Residue unit = a_[k][k] / pv;
      scale_row(k, *invmod(unit, q_), unit);
      for (std::size_t i = k + 1; i < m; ++i)
        if (a_[i][k] != 0)
          eliminate_row(i, k, a_[i][k] / pv);
      for (std::size_t j = k + 1; j < n; ++j)
        if (a_[k][j] != 0)
          eliminate_col(j, k, a_[k][j] / pv);
    }
    return exps;
  }

  Mat S() const { return from_grid(q_, S_); }
  Mat T() const { return from_grid(q_, T_); }

private:
  Residue sub(Residue x, Residue y) const { return x >= y ? x - y : x + (q_ - y); }
  Residue add(Residue x, Residue y) const {
    const Residue r = x + y;
    return r >= q_ ? r - q_ : r;
  }

  void swap_rows(std::size_t k, std::size_t r) {
    if (k == r)
      return;
    std::swap(a_[k], a_[r]);
    if (track_)
      for (auto &row : S_)
        std::swap(row[k], row[r]);
  }

  void swap_cols(std::size_t k, std::size_t c) {
    if (k == c)
      return;
    for (auto &row : a_)
      std::swap(row[k], row[c]);
    if (track_)
      std::swap(T_[k], T_[c]);
  }

  // Row k of A times unit_inv; column k of S times unit.
  void scale_row(std::size_t k, Residue unit_inv, Residue unit) {
    for (auto &x : a_[k])
      x = mulmod(x, unit_inv, q_);
    if (track_)
      for (auto &row : S_)
        row[k] = mulmod(row[k], unit, q_);
  }

  // row_i -= c * row_k; column k of S += c * column i.
  void eliminate_row(std::size_t i, std::size_t k, Residue c) {
    for (std::size_t j = 0; j < a_[i].size(); ++j)
      a_[i][j] = sub(a_[i][j], mulmod(c, a_[k][j], q_));
    if (track_)
      for (auto &row : S_)
        row[k] = add(row[k], mulmod(c, row[i], q_));
  }

  // col_j -= c * col_k; row k of T += c * row j.
  void eliminate_col(std::size_t j, std::size_t k, Residue c) {
    for (auto &row : a_)
      row[j] = sub(row[j], mulmod(c, row[k], q_));
    if (track_)
      for (std::size_t l = 0; l < T_[k].size(); ++l)
        T_[k][l] = add(T_[k][l], mulmod(c, T_[j][l], q_));
  }

  std::uint64_t p_;
  unsigned s_;
  std::uint64_t q_;
  Grid a_;
  bool track_;
  Grid S_, T_;
};

void require_local(const Mat &a, std::uint64_t p, unsigned s) {
  if (a.modulus() != ipow(p, s))
    throw UsageError("matrix modulus is not p^s");
}

} // namespace

LocalSmithForm snf_prime_power(const Mat &a, std::uint64_t p, unsigned s) {
  require_local(a, p, s);
  LocalEliminator elim(a, p, s, true);
  LocalSmithForm out;
  out.exponents = elim.run();
  std::vector<Residue> diag;
  for (unsigned e : out.exponents)
    diag.push_back(e == s ? 0 : ipow(p, e));
  out.S = elim.S();
  out.T = elim.T();
  out.D = Mat::diagonal(a.modulus(), a.rows(), a.cols(), diag);
  return out;
}

std::vector<unsigned> local_exponents(const Mat &a, std::uint64_t p, unsigned s) {
  require_local(a, p, s);
  return LocalEliminator(a, p, s, false).run();
}

SmithForm snf(const Ring &ring, const Mat &a) {
  if (a.modulus() != ring.modulus())
    throw UsageError("matrix modulus does not match ring");
  if (a.rows() > a.cols()) {
    SmithForm t = snf(ring, a.transpose());
    return {t.T.transpose(), t.D.transpose(), t.S.transpose(), std::move(t.omega)};
  }
  const std::size_t t = ring.component_count(), k_max = a.rows();
  std::vector<Mat> s_parts, t_parts;
  SmithForm out;
  for (std::size_t i = 0; i < t; ++i) {
    const auto &c = ring.component(i);
    LocalSmithForm local = snf_prime_power(a.reduced(c.q), c.p, c.s);
    s_parts.push_back(std::move(local.S));
    t_parts.push_back(std::move(local.T));
    out.omega.rows.push_back(std::move(local.exponents));
  }
  Mat S = crt_lift_mat(ring, s_parts);
  out.T = crt_lift_mat(ring, t_parts);

  // The CRT lift of the local diagonals has d_c = p_i^{alpha_ic} in component
  // i; D wants prod_i p_i^{alpha_ic}. They differ by the unit x_c whose i-th
  // component inverts prod_{j != i} p_j^{alpha_jc}; absorb x_c into column c of S.
  std::vector<Residue> diag(k_max);
  std::vector<unsigned> exps(t);
  std::vector<Residue> unit_parts(t);
  for (std::size_t c = 0; c < k_max; ++c) {
    for (std::size_t i = 0; i < t; ++i)
      exps[i] = out.omega.rows[i][c];
    diag[c] = ring.prime_product(exps);
    for (std::size_t i = 0; i < t; ++i) {
      const auto &comp = ring.component(i);
      Residue w = 1;
      for (std::size_t j = 0; j < t; ++j)
        if (j != i)
          w = mulmod(w, ipow(ring.component(j).p, exps[j]) % comp.q, comp.q);
      unit_parts[i] = *invmod(w, comp.q);
    }
    const Residue x = ring.crt_lift(unit_parts);
    for (std::size_t r = 0; r < S.rows(); ++r)
      S.set(r, c, ring.mul(S(r, c), x));
  }
  out.S = std::move(S);
  out.D = Mat::diagonal(ring.modulus(), a.rows(), a.cols(), diag);
  return out;
}

InvariantFactors invariant_factors(const Ring &ring, const Mat &a) {
  if (a.modulus() != ring.modulus())
    throw UsageError("matrix modulus does not match ring");
  InvariantFactors omega;
  for (const auto &c : ring.components())
    omega.rows.push_back(local_exponents(a.reduced(c.q), c.p, c.s));
  return omega;
}

bool is_well_formed(const Ring &ring, const InvariantFactors &omega) {
  if (omega.rows.size() != ring.component_count())
    return false;
  for (std::size_t i = 0; i < omega.rows.size(); ++i) {
    const auto &row = omega.rows[i];
    if (row.size() != omega.rows.front().size())
      return false;
    if (!std::is_sorted(row.begin(), row.end()))
      return false;
    if (!row.empty() && row.back() > ring.component(i).s)
      return false;
  }
  return true;
}

std::size_t inner_rank(const Ring &ring, const InvariantFactors &omega) {
  std::size_t rank = 0;
  const std::size_t k_max = omega.rows.empty() ? 0 : omega.rows.front().size();
  for (std::size_t c = 0; c < k_max; ++c)
    for (std::size_t i = 0; i < omega.rows.size(); ++i)
      if (omega.rows[i][c] < ring.component(i).s) {
        rank = c + 1;
        break;
      }
  return rank;
}

std::size_t inner_rank(const Ring &ring, const Mat &a) {
  return inner_rank(ring, invariant_factors(ring, a));
}

ProjectedRanks rank_via_projections(const Ring &ring, const Mat &a) {
  ProjectedRanks out{0, 0};
  for (const auto &c : ring.components()) {
    const auto exps = local_exponents(a.reduced(c.q), c.p, c.s);
    const auto local_rank = static_cast<std::size_t>(
        std::count_if(exps.begin(), exps.end(), [&](unsigned e) { return e < c.s; }));
    out.via_pi = std::max(out.via_pi, local_rank);
  }
  if (ring.component_count() == 1) {
    out.via_theta = out.via_pi;
    return out;
  }
  for (std::size_t i = 0; i < ring.component_count(); ++i) {
    const Ring quotient(ring.comodulus(i));
    out.via_theta = std::max(out.via_theta, inner_rank(quotient, a.reduced(quotient.modulus())));
  }
  return out;
}

} // namespace zhmat

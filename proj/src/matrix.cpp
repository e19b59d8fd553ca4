#include "zhmat/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "zhmat/error.hpp"

namespace zhmat {

Mat::Mat(std::uint64_t modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (modulus < 2 || rows == 0 || cols == 0)
    throw UsageError("matrix needs modulus >= 2 and positive dimensions");
}

Mat Mat::identity(std::uint64_t modulus, std::size_t n) {
  Mat m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.entries_[i * n + i] = 1;
  return m;
}

Mat Mat::from_rows(std::uint64_t modulus,
                   std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> v;
  for (const auto &r : rows)
    v.emplace_back(r);
  return from_rows(modulus, v);
}

Mat Mat::from_rows(std::uint64_t modulus, const std::vector<std::vector<std::int64_t>> &rows) {
  if (rows.empty())
    throw UsageError("matrix needs at least one row");
  Mat m(modulus, rows.size(), rows.front().size());
  const auto hm = static_cast<std::int64_t>(modulus);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw UsageError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      const std::int64_t r = rows[i][j] % hm;
      m.entries_[i * m.cols_ + j] = static_cast<Residue>(r < 0 ? r + hm : r);
    }
  }
  return m;
}

Mat Mat::from_entries(std::uint64_t modulus, std::size_t rows, std::size_t cols,
                      std::vector<Residue> entries) {
  Mat m(modulus, rows, cols);
  if (entries.size() != rows * cols)
    throw UsageError("entry count does not match dimensions");
  for (Residue e : entries)
    if (e >= modulus)
      throw UsageError("entry " + std::to_string(e) + " is not a canonical residue");
  m.entries_ = std::move(entries);
  return m;
}

Mat Mat::diagonal(std::uint64_t modulus, std::size_t rows, std::size_t cols,
                  std::span<const Residue> diag) {
  Mat m(modulus, rows, cols);
  if (diag.size() > std::min(rows, cols))
    throw UsageError("too many diagonal entries");
  for (std::size_t c = 0; c < diag.size(); ++c)
    m.set(c, c, diag[c]);
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
}

Mat Mat::transpose() const {
  Mat t(modulus_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t.entries_[j * rows_ + i] = entries_[i * cols_ + j];
  return t;
}

Mat Mat::reduced(std::uint64_t new_modulus) const {
  if (new_modulus < 2 || modulus_ % new_modulus != 0)
    throw UsageError("reduction modulus must divide the matrix modulus");
  Mat r(new_modulus, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] % new_modulus;
  return r;
}

Mat Mat::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_)
    throw UsageError("block out of range");
  Mat b(modulus_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      b.entries_[i * cols + j] = (*this)(row0 + i, col0 + j);
  return b;
}

namespace {

void require_same_shape(const Mat &a, const Mat &b) {
  if (a.modulus() != b.modulus() || a.rows() != b.rows() || a.cols() != b.cols())
    throw UsageError("matrix dimension or modulus mismatch");
}

} // namespace

Mat operator+(const Mat &a, const Mat &b) {
  require_same_shape(a, b);
  std::vector<Residue> e(a.entries().begin(), a.entries().end());
  const std::uint64_t h = a.modulus();
  for (std::size_t k = 0; k < e.size(); ++k) {
    const Residue s = e[k] + b.entries()[k];
    e[k] = s >= h ? s - h : s;
  }
  return Mat::from_entries(h, a.rows(), a.cols(), std::move(e));
}

Mat operator-(const Mat &a) {
  std::vector<Residue> e(a.entries().begin(), a.entries().end());
  for (auto &x : e)
    x = x == 0 ? 0 : a.modulus() - x;
  return Mat::from_entries(a.modulus(), a.rows(), a.cols(), std::move(e));
}

Mat operator-(const Mat &a, const Mat &b) { return a + (-b); }

Mat operator*(const Mat &a, const Mat &b) {
  if (a.modulus() != b.modulus() || a.cols() != b.rows())
    throw UsageError("matrix product dimension or modulus mismatch");
  const std::uint64_t h = a.modulus();
  Mat c(h, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = (acc + static_cast<unsigned __int128>(a(i, k)) * b(k, j)) % h;
      c.set(i, j, static_cast<Residue>(acc));
    }
  return c;
}

Mat scale(Residue c, const Mat &a) {
  Mat r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r.set(i, j, mulmod(c % a.modulus(), a(i, j), a.modulus()));
  return r;
}

Mat hconcat(std::span<const Mat> blocks) {
  if (blocks.empty())
    throw UsageError("hconcat needs at least one block");
  std::size_t cols = 0;
  for (const auto &b : blocks) {
    if (b.rows() != blocks.front().rows() || b.modulus() != blocks.front().modulus())
      throw UsageError("hconcat blocks must share row count and modulus");
    cols += b.cols();
  }
  Mat out(blocks.front().modulus(), blocks.front().rows(), cols);
  std::size_t offset = 0;
  for (const auto &b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.set(i, offset + j, b(i, j));
    offset += b.cols();
  }
  return out;
}

namespace {

void require_ring(const Ring &ring, const Mat &a) {
  if (ring.modulus() != a.modulus())
    throw UsageError("matrix modulus " + std::to_string(a.modulus()) +
                     " does not match ring modulus " + std::to_string(ring.modulus()));
}

} // namespace

Mat project_mat(const Ring &ring, const Mat &a, std::size_t i) {
  require_ring(ring, a);
  return a.reduced(ring.component(i).q);
}

Mat coproject_mat(const Ring &ring, const Mat &a, std::size_t i) {
  require_ring(ring, a);
  const std::uint64_t hi = ring.comodulus(i);
  if (hi == 1)
    throw UsageError("coprojection onto Z_1 is undefined for a prime-power modulus");
  return a.reduced(hi);
}

Mat crt_lift_mat(const Ring &ring, std::span<const Mat> components) {
  if (components.size() != ring.component_count())
    throw UsageError("crt_lift_mat needs one matrix per prime component");
  const std::size_t rows = components.front().rows(), cols = components.front().cols();
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].rows() != rows || components[i].cols() != cols)
      throw UsageError("component matrices differ in dimension");
    if (components[i].modulus() != ring.component(i).q)
      throw UsageError("component matrix has the wrong modulus");
  }
  Mat out(ring.modulus(), rows, cols);
  std::vector<Residue> residues(components.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t i = 0; i < components.size(); ++i)
        residues[i] = components[i](r, c);
      out.set(r, c, ring.crt_lift(residues));
    }
  return out;
}

Residue det_prime_power(const Mat &a, std::uint64_t p, unsigned s) {
  if (a.rows() != a.cols())
    throw UsageError("determinant of a non-square matrix");
  const std::uint64_t q = a.modulus();
  const std::size_t n = a.rows();
  std::vector<std::vector<Residue>> w(n, std::vector<Residue>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      w[i][j] = a(i, j);
  Residue result = 1 % q;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    unsigned best = s;
    for (std::size_t i = k; i < n && best > 0; ++i)
      for (std::size_t j = k; j < n; ++j) {
        const unsigned v = valuation(w[i][j], p, s);
        if (v < best) {
          best = v, pr = i, pc = j;
          if (v == 0)
            break;
        }
      }
    if (best == s)
      return 0;
    if (pr != k) {
      std::swap(w[pr], w[k]);
      negate = !negate;
    }
    if (pc != k) {
      for (auto &row : w)
        std::swap(row[pc], row[k]);
      negate = !negate;
    }
    const Residue pivot = w[k][k];
    const std::uint64_t pv = ipow(p, best);
    const Residue unit_inv = *invmod(pivot / pv, q);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (w[i][k] == 0)
        continue;
      const Residue c = mulmod(w[i][k] / pv, unit_inv, q);
      for (std::size_t j = k; j < n; ++j)
        w[i][j] = (w[i][j] + q - mulmod(c, w[k][j], q)) % q;
    }
    result = mulmod(result, pivot, q);
  }
  return negate && result != 0 ? q - result : result;
}

std::optional<Mat> inverse_prime_power(const Mat &a, std::uint64_t p) {
  if (a.rows() != a.cols())
    throw UsageError("inverse of a non-square matrix");
  const std::uint64_t q = a.modulus();
  const std::size_t n = a.rows();
  std::vector<std::vector<Residue>> w(n, std::vector<Residue>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      w[i][j] = a(i, j);
    w[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k;
    while (pr < n && w[pr][k] % p == 0)
      ++pr;
    if (pr == n)
      return std::nullopt;
    std::swap(w[pr], w[k]);
    const Residue inv = *invmod(w[k][k], q);
    for (auto &x : w[k])
      x = mulmod(x, inv, q);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w[i][k] == 0)
        continue;
      const Residue c = w[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j)
        w[i][j] = (w[i][j] + q - mulmod(c, w[k][j], q)) % q;
    }
  }
  Mat inv(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv.set(i, j, w[i][n + j]);
  return inv;
}

Residue det(const Ring &ring, const Mat &a) {
  require_ring(ring, a);
  if (a.rows() != a.cols())
    throw UsageError("determinant of a non-square matrix");
  std::vector<Residue> parts;
  for (std::size_t i = 0; i < ring.component_count(); ++i) {
    const auto &c = ring.component(i);
    parts.push_back(det_prime_power(a.reduced(c.q), c.p, c.s));
  }
  return ring.crt_lift(parts);
}

bool is_invertible(const Ring &ring, const Mat &a) { return ring.is_unit(det(ring, a)); }

std::optional<Mat> inverse(const Ring &ring, const Mat &a) {
  require_ring(ring, a);
  if (a.rows() != a.cols())
    throw UsageError("inverse of a non-square matrix");
  std::vector<Mat> parts;
  for (std::size_t i = 0; i < ring.component_count(); ++i) {
    const auto &c = ring.component(i);
    auto inv = inverse_prime_power(a.reduced(c.q), c.p);
    if (!inv)
      return std::nullopt;
    parts.push_back(std::move(*inv));
  }
  return crt_lift_mat(ring, parts);
}

Mat random_matrix(std::uint64_t modulus, std::size_t rows, std::size_t cols, Rng &rng) {
  std::vector<Residue> e(rows * cols);
  for (auto &x : e)
    x = rng.below(modulus);
  return Mat::from_entries(modulus, rows, cols, std::move(e));
}

Mat random_invertible(const Ring &ring, std::size_t n, Rng &rng) {
  if (n == 0)
    throw UsageError("random_invertible needs n >= 1");
  for (;;) {
    Mat m = random_matrix(ring.modulus(), n, n, rng);
    if (is_invertible(ring, m))
      return m;
  }
}

Mat random_invertible(const Ring &ring, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_invertible(ring, n, rng);
}

std::optional<std::uint64_t> matrix_space_size(std::uint64_t modulus, std::size_t rows,
                                               std::size_t cols) {
  unsigned __int128 size = 1;
  for (std::size_t k = 0; k < rows * cols; ++k) {
    size *= modulus;
    if (size > UINT64_MAX)
      return std::nullopt;
  }
  return static_cast<std::uint64_t>(size);
}

std::uint64_t matrix_index(const Mat &a) {
  std::uint64_t idx = 0;
  for (Residue e : a.entries())
    idx = idx * a.modulus() + e;
  return idx;
}

Mat matrix_at(std::uint64_t modulus, std::size_t rows, std::size_t cols, std::uint64_t index) {
  std::vector<Residue> e(rows * cols);
  for (std::size_t k = e.size(); k-- > 0;) {
    e[k] = index % modulus;
    index /= modulus;
  }
  return Mat::from_entries(modulus, rows, cols, std::move(e));
}

} // namespace zhmat

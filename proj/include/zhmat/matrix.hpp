#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "zhmat/ring.hpp"
#include "zhmat/rng.hpp"

namespace zhmat {

/// Dense m x n matrix over Z_modulus, entries stored row-major as canonical
/// residues. Only the modulus is carried; routines that need the prime
/// factorization take a Ring alongside.
class Mat {
public:
  Mat() = default;
  /// Zero matrix.
  Mat(std::uint64_t modulus, std::size_t rows, std::size_t cols);

  static Mat identity(std::uint64_t modulus, std::size_t n);
  /// Entries may be negative; they are reduced into [0, modulus).
  static Mat from_rows(std::uint64_t modulus,
                       std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Mat from_rows(std::uint64_t modulus, const std::vector<std::vector<std::int64_t>> &rows);
  /// Entries must already be canonical.
  static Mat from_entries(std::uint64_t modulus, std::size_t rows, std::size_t cols,
                          std::vector<Residue> entries);
  static Mat diagonal(std::uint64_t modulus, std::size_t rows, std::size_t cols,
                      std::span<const Residue> diag);

  std::uint64_t modulus() const { return modulus_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Residue> entries() const { return entries_; }

  Residue operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Residue v) { entries_[i * cols_ + j] = v % modulus_; }

  bool is_zero() const;
  Mat transpose() const;
  /// Entrywise reduction into Z_new_modulus; new_modulus must divide modulus.
  Mat reduced(std::uint64_t new_modulus) const;
  Mat block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  friend auto operator<=>(const Mat &, const Mat &) = default;
  friend bool operator==(const Mat &, const Mat &) = default;

private:
  std::uint64_t modulus_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> entries_;
};

Mat operator+(const Mat &a, const Mat &b);
Mat operator-(const Mat &a, const Mat &b);
Mat operator-(const Mat &a);
Mat operator*(const Mat &a, const Mat &b);
Mat scale(Residue c, const Mat &a);

/// Side-by-side concatenation [A_1 | A_2 | ...]; all blocks share row count.
Mat hconcat(std::span<const Mat> blocks);

Mat project_mat(const Ring &ring, const Mat &a, std::size_t i);
Mat coproject_mat(const Ring &ring, const Mat &a, std::size_t i);
/// Entrywise CRT lift of one matrix per prime component (components[i] over
/// Z_{p_i^{s_i}}).
Mat crt_lift_mat(const Ring &ring, std::span<const Mat> components);

/// Determinant over Z_h: per prime power by elimination with minimal-valuation
/// pivots, then CRT.
Residue det(const Ring &ring, const Mat &a);
bool is_invertible(const Ring &ring, const Mat &a);
std::optional<Mat> inverse(const Ring &ring, const Mat &a);

/// Elimination kernels over the local ring Z_{p^s}; `a.modulus()` must be p^s.
Residue det_prime_power(const Mat &a, std::uint64_t p, unsigned s);
std::optional<Mat> inverse_prime_power(const Mat &a, std::uint64_t p);

Mat random_matrix(std::uint64_t modulus, std::size_t rows, std::size_t cols, Rng &rng);
/// Uniform element of GL_n(Z_h) by rejection sampling on is_invertible.
Mat random_invertible(const Ring &ring, std::size_t n, Rng &rng);
Mat random_invertible(const Ring &ring, std::size_t n, std::uint64_t seed);

/// h^{rows*cols}, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> matrix_space_size(std::uint64_t modulus, std::size_t rows,
                                               std::size_t cols);
/// Row-major base-h encoding, first entry most significant, so index order is
/// the lexicographic order of entry vectors.
std::uint64_t matrix_index(const Mat &a);
Mat matrix_at(std::uint64_t modulus, std::size_t rows, std::size_t cols, std::uint64_t index);

} // namespace zhmat

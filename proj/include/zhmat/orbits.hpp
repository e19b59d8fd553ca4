#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zhmat/ring.hpp"
#include "zhmat/smith.hpp"

namespace zhmat {

using OrbitLabel = InvariantFactors;

inline constexpr std::uint64_t kDefaultCensusBudget = 10'000'000;

struct CensusEntry {
  OrbitLabel label;
  std::uint64_t length;
};

struct CensusReport {
  std::uint64_t h;
  std::size_t m, n;
  std::vector<CensusEntry> entries; // sorted by label
  std::uint64_t total;

  std::optional<std::uint64_t> length_of(const OrbitLabel &label) const;
};

/// Every admissible invariant-factor table for min(m, n) columns, in
/// lexicographic order.
std::vector<OrbitLabel> enumerate_orbit_labels(const Ring &ring, std::size_t m, std::size_t n);
/// prod_i C(s_i + k, k), k = min(m, n).
std::uint64_t expected_label_count(const Ring &ring, std::size_t m, std::size_t n);

/// Tallies the invariant factors of every matrix in Z_h^{m x n}. The index
/// range is split across `threads` workers whose tallies are merged at the end.
/// Throws BudgetExceeded when h^{mn} > budget.
CensusReport census_by_enumeration(const Ring &ring, std::size_t m, std::size_t n,
                                   std::uint64_t budget = kDefaultCensusBudget,
                                   unsigned threads = 1);

struct OrbitProductRow {
  OrbitLabel label;
  std::uint64_t length;
  std::vector<std::uint64_t> component_lengths;
  std::uint64_t product;
};

struct OrbitProductCheck {
  bool holds;
  std::vector<OrbitProductRow> rows;
  std::optional<OrbitLabel> first_violation;
};

/// Compares each orbit length over Z_h with the product of the matching
/// orbit lengths over the prime-power components, all from full censuses.
OrbitProductCheck verify_orbit_product(const Ring &ring, std::size_t m, std::size_t n,
                                       std::uint64_t budget = kDefaultCensusBudget,
                                       unsigned threads = 1);

} // namespace zhmat

#include "zhmat/orbits.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <thread>

#include "zhmat/error.hpp"
#include "zhmat/matrix.hpp"

namespace zhmat {

std::optional<std::uint64_t> CensusReport::length_of(const OrbitLabel &label) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), label,
                             [](const CensusEntry &e, const OrbitLabel &l) { return e.label < l; });
  if (it == entries.end() || it->label != label)
    return std::nullopt;
  return it->length;
}

namespace {

void nondecreasing_vectors(std::size_t len, unsigned lo, unsigned hi, std::vector<unsigned> &cur,
                           std::vector<std::vector<unsigned>> &out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (unsigned v = lo; v <= hi; ++v) {
    cur.push_back(v);
    nondecreasing_vectors(len, v, hi, cur, out);
    cur.pop_back();
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j)
    r = r * (n - k + j) / j;
  return r;
}

} // namespace

std::vector<OrbitLabel> enumerate_orbit_labels(const Ring &ring, std::size_t m, std::size_t n) {
  const std::size_t k = std::min(m, n);
  std::vector<std::vector<std::vector<unsigned>>> per_prime;
  for (const auto &c : ring.components()) {
    std::vector<std::vector<unsigned>> rows;
    std::vector<unsigned> cur;
    nondecreasing_vectors(k, 0, c.s, cur, rows);
    per_prime.push_back(std::move(rows));
  }
  std::vector<OrbitLabel> labels{OrbitLabel{}};
  for (const auto &rows : per_prime) {
    std::vector<OrbitLabel> next;
    for (const auto &partial : labels)
      for (const auto &row : rows) {
        OrbitLabel l = partial;
        l.rows.push_back(row);
        next.push_back(std::move(l));
      }
    labels = std::move(next);
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::uint64_t expected_label_count(const Ring &ring, std::size_t m, std::size_t n) {
  const std::size_t k = std::min(m, n);
  std::uint64_t count = 1;
  for (const auto &c : ring.components())
    count *= binomial(c.s + k, k);
  return count;
}

CensusReport census_by_enumeration(const Ring &ring, std::size_t m, std::size_t n,
                                   std::uint64_t budget, unsigned threads) {
  const auto size = matrix_space_size(ring.modulus(), m, n);
  if (!size || *size > budget)
    throw BudgetExceeded("census of Z_" + std::to_string(ring.modulus()) + "^{" +
                         std::to_string(m) + "x" + std::to_string(n) +
                         "} exceeds the enumeration budget of " + std::to_string(budget));
  threads = std::max(1u, threads);
  std::vector<std::map<OrbitLabel, std::uint64_t>> tallies(threads);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = *size * w / threads, hi = *size * (w + 1) / threads;
    for (std::uint64_t idx = lo; idx < hi; ++idx)
      ++tallies[w][invariant_factors(ring, matrix_at(ring.modulus(), m, n, idx))];
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back(work, w);
  }
  std::map<OrbitLabel, std::uint64_t> merged;
  for (const auto &t : tallies)
    for (const auto &[label, count] : t)
      merged[label] += count;
  CensusReport report{ring.modulus(), m, n, {}, 0};
  for (const auto &[label, count] : merged) {
    report.entries.push_back({label, count});
    report.total += count;
  }
  return report;
}

OrbitProductCheck verify_orbit_product(const Ring &ring, std::size_t m, std::size_t n,
                                       std::uint64_t budget, unsigned threads) {
  const CensusReport whole = census_by_enumeration(ring, m, n, budget, threads);
  std::vector<CensusReport> parts;
  for (const auto &c : ring.components())
    parts.push_back(census_by_enumeration(Ring(c.q), m, n, budget, threads));

  OrbitProductCheck check{true, {}, std::nullopt};
  for (const auto &label : enumerate_orbit_labels(ring, m, n)) {
    OrbitProductRow row{label, whole.length_of(label).value_or(0), {}, 1};
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::uint64_t len = parts[i].length_of(OrbitLabel{{label.rows[i]}}).value_or(0);
      row.component_lengths.push_back(len);
      row.product *= len;
    }
    if (row.length != row.product && check.holds) {
      check.holds = false;
      check.first_violation = label;
    }
    check.rows.push_back(std::move(row));
  }
  return check;
}

} // namespace zhmat

#include "zhmat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "zhmat/error.hpp"

namespace zhmat::oracle {

namespace {

using Int = __int128;

Int int_det(std::vector<std::vector<Int>> m) {
  const std::size_t k = m.size();
  if (k == 1)
    return m[0][0];
  if (k == 2)
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Int total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c] == 0)
      continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Int> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c)
          row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const Int term = m[0][c] * int_det(std::move(minor));
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

unsigned int_valuation(Int x, std::uint64_t p) {
  if (x < 0)
    x = -x;
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>> &out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

} // namespace

InvariantFactors omega_via_minors(const Ring &ring, const Mat &input) {
  if (input.modulus() != ring.modulus())
    throw UsageError("matrix modulus does not match ring");
  const Mat a = input.rows() <= input.cols() ? input : input.transpose();
  const std::size_t m = a.rows(), n = a.cols();
  if (m > 4 || ring.modulus() >= (1u << 20))
    throw BudgetExceeded("minor oracle needs min(m, n) <= 4 and h < 2^20");
  InvariantFactors omega;
  for (const auto &comp : ring.components()) {
    // Augmented integer matrix [A | q I].
    std::vector<std::vector<Int>> aug(m, std::vector<Int>(n + m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        aug[i][j] = static_cast<Int>(a(i, j));
      aug[i][n + i] = static_cast<Int>(comp.q);
    }
    std::vector<unsigned> row;
    unsigned prev = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      std::vector<std::vector<std::size_t>> rsets, csets;
      subsets(m, k, rsets);
      subsets(n + m, k, csets);
      unsigned best = UINT32_MAX;
      for (const auto &rs : rsets)
        for (const auto &cs : csets) {
          std::vector<std::vector<Int>> minor(k, std::vector<Int>(k));
          for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y)
              minor[x][y] = aug[rs[x]][cs[y]];
          const Int d = int_det(std::move(minor));
          if (d != 0)
            best = std::min(best, int_valuation(d, comp.p));
        }
      row.push_back(best - prev);
      prev = best;
    }
    omega.rows.push_back(std::move(row));
  }
  return omega;
}

namespace {

// Calls visit(entries) for every vector in Z_h^len.
template <class F> void for_each_vector(std::uint64_t h, std::size_t len, F &&visit) {
  std::vector<std::uint64_t> v(len, 0);
  for (;;) {
    visit(v);
    std::size_t k = 0;
    while (k < len && ++v[k] == h)
      v[k++] = 0;
    if (k == len)
      return;
  }
}

std::uint64_t search_space(std::uint64_t h, std::size_t cells, std::uint64_t budget) {
  unsigned __int128 size = 1;
  for (std::size_t k = 0; k < cells; ++k) {
    size *= h;
    if (size > budget)
      throw BudgetExceeded("factorization search over h^" + std::to_string(cells) +
                           " candidates exceeds the budget");
  }
  return static_cast<std::uint64_t>(size);
}

} // namespace

std::size_t inner_rank_by_factorization(const Ring &ring, const Mat &a, std::uint64_t budget) {
  const std::uint64_t h = ring.modulus();
  const std::size_t m = a.rows(), n = a.cols();
  if (a.is_zero())
    return 0;
  for (std::size_t r = 1; r < std::min(m, n); ++r) {
    search_space(h, (m + n) * r, budget);
    bool found = false;
    for_each_vector(h, m * r, [&](const std::vector<std::uint64_t> &b) {
      if (found)
        return;
      for_each_vector(h, r * n, [&](const std::vector<std::uint64_t> &c) {
        if (found)
          return;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            unsigned __int128 acc = 0;
            for (std::size_t k = 0; k < r; ++k)
              acc += static_cast<unsigned __int128>(b[i * r + k]) * c[k * n + j];
            if (static_cast<std::uint64_t>(acc % h) != a(i, j))
              return;
          }
        found = true;
      });
    });
    if (found)
      return r;
  }
  // A = I * A (or A * I) always factors through min(m, n).
  return std::min(m, n);
}

std::vector<std::uint64_t> products_through(const Ring &ring, std::size_t m, std::size_t n,
                                            std::size_t r, std::uint64_t budget) {
  const std::uint64_t h = ring.modulus();
  if (r == 0)
    return {0};
  search_space(h, (m + n) * r, budget);
  std::set<std::uint64_t> seen;
  for_each_vector(h, m * r, [&](const std::vector<std::uint64_t> &b) {
    for_each_vector(h, r * n, [&](const std::vector<std::uint64_t> &c) {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          unsigned __int128 acc = 0;
          for (std::size_t k = 0; k < r; ++k)
            acc += static_cast<unsigned __int128>(b[i * r + k]) * c[k * n + j];
          idx = idx * h + static_cast<std::uint64_t>(acc % h);
        }
      seen.insert(idx);
    });
  });
  return {seen.begin(), seen.end()};
}

namespace {

class PlainCliqueSearch {
public:
  explicit PlainCliqueSearch(const AdjacencyMatrix &adj) : adj_(adj) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> all(adj_.size());
    for (std::size_t v = 0; v < all.size(); ++v)
      all[v] = v;
    std::vector<std::size_t> current;
    search(current, all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

private:
  // Number of colours used by a first-fit colouring of the candidates.
  std::size_t colour_bound(const std::vector<std::size_t> &cand) const {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : cand) {
      bool placed = false;
      for (auto &cls : classes) {
        if (std::none_of(cls.begin(), cls.end(), [&](std::size_t u) { return adj_[u][v]; })) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed)
        classes.push_back({v});
    }
    return classes.size();
  }

  void search(std::vector<std::size_t> &current, std::vector<std::size_t> cand) {
    if (cand.empty()) {
      if (current.size() > best_.size())
        best_ = current;
      return;
    }
    if (current.size() + cand.size() <= best_.size() ||
        current.size() + colour_bound(cand) <= best_.size())
      return;
    while (!cand.empty()) {
      if (current.size() + cand.size() <= best_.size())
        return;
      const std::size_t v = cand.back();
      cand.pop_back();
      std::vector<std::size_t> next;
      for (std::size_t u : cand)
        if (adj_[u][v])
          next.push_back(u);
      current.push_back(v);
      search(current, std::move(next));
      current.pop_back();
    }
  }

  const AdjacencyMatrix &adj_;
  std::vector<std::size_t> best_;
};

} // namespace

std::vector<std::size_t> exact_clique(const AdjacencyMatrix &adj) {
  if (adj.size() > 256)
    throw BudgetExceeded("oracle clique search is limited to 256 vertices");
  return PlainCliqueSearch(adj).run();
}

std::vector<std::size_t> exact_mis(const AdjacencyMatrix &adj) {
  AdjacencyMatrix comp(adj.size(), std::vector<bool>(adj.size(), false));
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (std::size_t v = 0; v < adj.size(); ++v)
      comp[u][v] = u != v && !adj[u][v];
  return exact_clique(comp);
}

} // namespace zhmat::oracle

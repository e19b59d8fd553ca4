#pragma once

#include <cstdint>
#include <vector>

namespace zhmat {

/// Undirected simple graph with adjacency stored as packed bit rows.
class BitGraph {
public:
  explicit BitGraph(std::size_t vertices);

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }
  const std::uint64_t *row(std::size_t u) const { return bits_.data() + u * words_; }
  std::size_t degree(std::size_t u) const;
  BitGraph complement() const;

private:
  std::size_t n_, words_;
  std::vector<std::uint64_t> bits_;
};

/// Exact maximum clique by branch and bound with a greedy colouring bound
/// (MCQ style). Vertices are processed in order of decreasing degree, ties by
/// index, so results are deterministic.
std::vector<std::size_t> maximum_clique(const BitGraph &g);

/// All cliques with exactly k vertices, each listed once with sorted vertex
/// ids. Stops with BudgetExceeded after `limit` cliques.
std::vector<std::vector<std::size_t>> cliques_of_size(const BitGraph &g, std::size_t k,
                                                      std::size_t limit = 1'000'000);

} // namespace zhmat

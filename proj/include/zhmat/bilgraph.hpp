#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zhmat/bitgraph.hpp"
#include "zhmat/matrix.hpp"
#include "zhmat/ring.hpp"

namespace zhmat {

/// Parameters of Bil_r(Z_h^{m x n}); requires 1 <= r <= m <= n.
struct GraphSpec {
  std::uint64_t h;
  std::size_t m, n, r;

  void validate() const;
  bool operator==(const GraphSpec &) const = default;
};

/// Row-major base-h index of a vertex matrix (see matrix_index).
using VertexId = std::uint64_t;

inline constexpr std::uint64_t kDefaultRankTableBudget = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kDefaultMaterializeBudget = 10'000;
inline constexpr std::uint64_t kDefaultExactBudget = 256;
inline constexpr std::uint64_t kDefaultTraversalBudget = 1'000'000;

/// The generalized bilinear forms graph. Adjacency is always computed from
/// inner ranks of differences; when h^{mn} fits the rank-table budget the
/// rank of every matrix is tabulated once by vertex id, since the graph is a
/// Cayley graph on the additive group and adjacency only depends on A - B.
class BilGraph {
public:
  explicit BilGraph(GraphSpec spec, std::uint64_t rank_table_budget = kDefaultRankTableBudget,
                    unsigned threads = 1);

  const GraphSpec &spec() const { return spec_; }
  const Ring &ring() const { return ring_; }
  /// h^{mn}; nullopt if it overflows 64 bits.
  std::optional<std::uint64_t> vertex_count() const { return vertex_count_; }
  bool has_rank_table() const { return !rank_table_.empty(); }

  Mat vertex(VertexId id) const { return matrix_at(spec_.h, spec_.m, spec_.n, id); }
  VertexId id(const Mat &a) const;
  VertexId add(VertexId a, VertexId b) const;
  VertexId sub(VertexId a, VertexId b) const;

  std::size_t rank(const Mat &a) const;
  std::size_t rank(VertexId id) const;
  bool adjacent(const Mat &a, const Mat &b) const;
  bool adjacent(VertexId a, VertexId b) const;

  /// Nonzero matrices of inner rank <= r, sorted by id. Needs the rank table.
  const std::vector<VertexId> &connection_set() const;
  /// |connection_set()|.
  std::uint64_t degree() const { return connection_set().size(); }

private:
  void require_table() const;

  GraphSpec spec_;
  Ring ring_;
  std::optional<std::uint64_t> vertex_count_;
  std::vector<std::uint8_t> rank_table_;
  std::vector<VertexId> connection_;
};

/// Materialized adjacency below the budget, otherwise an on-demand oracle.
class BuiltGraph {
public:
  bool materialized() const { return bits_.has_value(); }
  const BitGraph &bits() const;
  bool adjacent(VertexId a, VertexId b) const;
  std::uint64_t vertex_count() const { return vertices_; }
  /// Degree of every vertex; empty unless materialized.
  const std::vector<std::size_t> &degrees() const { return degrees_; }
  bool regular() const;

private:
  friend BuiltGraph build_graph(const BilGraph &, std::uint64_t);
  const BilGraph *graph_ = nullptr;
  std::uint64_t vertices_ = 0;
  std::optional<BitGraph> bits_;
  std::vector<std::size_t> degrees_;
};

BuiltGraph build_graph(const BilGraph &graph, std::uint64_t budget = kDefaultMaterializeBudget);

/// h^{nr} and h^{n(m-r)}; nullopt on overflow.
std::optional<std::uint64_t> clique_number_formula(const GraphSpec &spec);
std::optional<std::uint64_t> independence_number_formula(const GraphSpec &spec);

/// Exact values by branch and bound on the graph and on its complement.
/// Throw BudgetExceeded when h^{mn} > budget.
std::uint64_t exact_clique_number(const BilGraph &graph, std::uint64_t budget = kDefaultExactBudget);
std::uint64_t exact_independence_number(const BilGraph &graph,
                                        std::uint64_t budget = kDefaultExactBudget);

struct TransitivityReport {
  std::size_t samples = 0;
  std::size_t adjacent_pairs = 0; // sampled pairs that were edges
  std::size_t automorphism_failures = 0;
  std::size_t translation_failures = 0;
  bool ok() const { return automorphism_failures == 0 && translation_failures == 0; }
};

/// Samples X -> S^{-1} X T + A and translations X -> X + (B - A) and checks
/// that each preserves adjacency and non-adjacency on sampled vertex pairs.
/// Half of the sampled pairs differ by a random product of an m x r and an
/// r x n matrix, so edges are exercised as well as non-edges.
TransitivityReport check_vertex_transitivity(const BilGraph &graph, std::size_t samples,
                                             std::uint64_t seed);

/// Breadth-first search from the zero matrix along the connection set.
bool check_connectivity(const BilGraph &graph, std::uint64_t budget = kDefaultTraversalBudget);

struct SandwichReport {
  std::uint64_t vertices, alpha, omega;
  std::uint64_t chi_lower_bound; // ceil(|V| / alpha)
  bool holds;                    // |V| / alpha >= omega
  bool tight;                    // |V| = alpha * omega
};

/// chi >= |V| / alpha >= omega for vertex-transitive graphs.
SandwichReport sandwich_inequality(std::uint64_t vertices, std::uint64_t alpha,
                                   std::uint64_t omega);

} // namespace zhmat

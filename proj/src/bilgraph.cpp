#include "zhmat/bilgraph.hpp"

#include <deque>
#include <string>
#include <thread>

#include "zhmat/error.hpp"
#include "zhmat/smith.hpp"

namespace zhmat {

void GraphSpec::validate() const {
  if (!(1 <= r && r <= m && m <= n))
    throw UsageError("graph parameters need 1 <= r <= m <= n, got m=" + std::to_string(m) +
                     " n=" + std::to_string(n) + " r=" + std::to_string(r));
  if (h < 2)
    throw UsageError("modulus must be at least 2");
}

BilGraph::BilGraph(GraphSpec spec, std::uint64_t rank_table_budget, unsigned threads)
    : spec_(spec), ring_((spec.validate(), spec.h)),
      vertex_count_(matrix_space_size(spec.h, spec.m, spec.n)) {
  if (!vertex_count_ || *vertex_count_ > rank_table_budget)
    return;
  rank_table_.assign(*vertex_count_, 0);
  threads = std::max(1u, threads);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = *vertex_count_ * w / threads, hi = *vertex_count_ * (w + 1) / threads;
    for (std::uint64_t idx = lo; idx < hi; ++idx)
      rank_table_[idx] = static_cast<std::uint8_t>(inner_rank(ring_, vertex(idx)));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back(work, w);
  }
  for (std::uint64_t idx = 1; idx < *vertex_count_; ++idx)
    if (rank_table_[idx] <= spec_.r)
      connection_.push_back(idx);
}

VertexId BilGraph::id(const Mat &a) const {
  if (a.modulus() != spec_.h || a.rows() != spec_.m || a.cols() != spec_.n)
    throw UsageError("matrix does not belong to this graph's vertex set");
  if (!vertex_count_)
    throw BudgetExceeded("vertex ids overflow 64 bits for this graph");
  return matrix_index(a);
}

// Digit-wise arithmetic on base-h vertex ids.
VertexId BilGraph::add(VertexId a, VertexId b) const {
  const std::uint64_t h = spec_.h;
  VertexId out = 0, place = 1;
  for (std::size_t k = 0; k < spec_.m * spec_.n; ++k, a /= h, b /= h, place *= h) {
    const std::uint64_t d = a % h + b % h;
    out += (d >= h ? d - h : d) * place;
  }
  return out;
}

VertexId BilGraph::sub(VertexId a, VertexId b) const {
  const std::uint64_t h = spec_.h;
  VertexId out = 0, place = 1;
  for (std::size_t k = 0; k < spec_.m * spec_.n; ++k, a /= h, b /= h, place *= h) {
    const std::uint64_t da = a % h, db = b % h;
    out += (da >= db ? da - db : da + h - db) * place;
  }
  return out;
}

std::size_t BilGraph::rank(const Mat &a) const {
  if (has_rank_table())
    return rank_table_[id(a)];
  return inner_rank(ring_, a);
}

std::size_t BilGraph::rank(VertexId v) const {
  if (has_rank_table())
    return rank_table_.at(v);
  return inner_rank(ring_, vertex(v));
}

bool BilGraph::adjacent(const Mat &a, const Mat &b) const {
  if (a.rows() != spec_.m || a.cols() != spec_.n || b.rows() != spec_.m || b.cols() != spec_.n)
    throw UsageError("matrix dimensions do not match the graph");
  if (a == b)
    return false;
  return rank(a - b) <= spec_.r;
}

bool BilGraph::adjacent(VertexId a, VertexId b) const {
  if (a == b)
    return false;
  return rank(sub(a, b)) <= spec_.r;
}

void BilGraph::require_table() const {
  if (!has_rank_table())
    throw BudgetExceeded("graph exceeds the rank-table budget");
}

const std::vector<VertexId> &BilGraph::connection_set() const {
  require_table();
  return connection_;
}

const BitGraph &BuiltGraph::bits() const {
  if (!bits_)
    throw BudgetExceeded("graph is in adjacency-oracle mode");
  return *bits_;
}

bool BuiltGraph::adjacent(VertexId a, VertexId b) const {
  if (bits_)
    return bits_->has_edge(a, b);
  return graph_->adjacent(a, b);
}

bool BuiltGraph::regular() const {
  for (std::size_t d : degrees_)
    if (d != degrees_.front())
      return false;
  return true;
}

BuiltGraph build_graph(const BilGraph &graph, std::uint64_t budget) {
  BuiltGraph built;
  built.graph_ = &graph;
  const auto count = graph.vertex_count();
  built.vertices_ = count.value_or(0);
  if (!count || *count > budget || !graph.has_rank_table())
    return built;
  BitGraph bits(*count);
  for (VertexId u = 0; u < *count; ++u)
    for (VertexId c : graph.connection_set()) {
      const VertexId v = graph.add(u, c);
      if (u < v)
        bits.add_edge(u, v);
    }
  for (VertexId u = 0; u < *count; ++u)
    built.degrees_.push_back(bits.degree(u));
  built.bits_ = std::move(bits);
  return built;
}

namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) {
  unsigned __int128 r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    r *= base;
    if (r > UINT64_MAX)
      return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

BitGraph materialize_for_exact(const BilGraph &graph, std::uint64_t budget) {
  const auto count = graph.vertex_count();
  if (!count || *count > budget)
    throw BudgetExceeded("exact search needs h^{mn} <= " + std::to_string(budget));
  return build_graph(graph, budget).bits();
}

} // namespace

std::optional<std::uint64_t> clique_number_formula(const GraphSpec &spec) {
  return checked_pow(spec.h, spec.n * spec.r);
}

std::optional<std::uint64_t> independence_number_formula(const GraphSpec &spec) {
  return checked_pow(spec.h, spec.n * (spec.m - spec.r));
}

std::uint64_t exact_clique_number(const BilGraph &graph, std::uint64_t budget) {
  return maximum_clique(materialize_for_exact(graph, budget)).size();
}

std::uint64_t exact_independence_number(const BilGraph &graph, std::uint64_t budget) {
  return maximum_clique(materialize_for_exact(graph, budget).complement()).size();
}

TransitivityReport check_vertex_transitivity(const BilGraph &graph, std::size_t samples,
                                             std::uint64_t seed) {
  const GraphSpec &sp = graph.spec();
  const Ring &ring = graph.ring();
  Rng rng(seed);
  auto random_pair = [&](Mat &x, Mat &y) {
    x = random_matrix(sp.h, sp.m, sp.n, rng);
    if (rng.below(2) == 0) {
      y = random_matrix(sp.h, sp.m, sp.n, rng);
    } else {
      const Mat b = random_matrix(sp.h, sp.m, sp.r, rng);
      const Mat c = random_matrix(sp.h, sp.r, sp.n, rng);
      y = x + b * c;
    }
  };
  TransitivityReport report;
  Mat x, y;
  for (std::size_t k = 0; k < samples; ++k) {
    const Mat s = random_invertible(ring, sp.m, rng);
    const Mat t = random_invertible(ring, sp.n, rng);
    const Mat a = random_matrix(sp.h, sp.m, sp.n, rng);
    const Mat s_inv = *inverse(ring, s);
    random_pair(x, y);
    const bool before = graph.adjacent(x, y);
    report.adjacent_pairs += before ? 1 : 0;
    if (graph.adjacent(s_inv * x * t + a, s_inv * y * t + a) != before)
      ++report.automorphism_failures;

    const Mat from = random_matrix(sp.h, sp.m, sp.n, rng);
    const Mat to = random_matrix(sp.h, sp.m, sp.n, rng);
    const Mat shift = to - from;
    random_pair(x, y);
    if (from + shift != to || graph.adjacent(x + shift, y + shift) != graph.adjacent(x, y))
      ++report.translation_failures;
    ++report.samples;
  }
  return report;
}

bool check_connectivity(const BilGraph &graph, std::uint64_t budget) {
  const auto count = graph.vertex_count();
  if (!count || *count > budget)
    throw BudgetExceeded("connectivity check needs h^{mn} <= " + std::to_string(budget));
  const auto &conn = graph.connection_set();
  std::vector<bool> seen(*count, false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::uint64_t reached = 1;
  while (!queue.empty()) {
    const Mat u = graph.vertex(queue.front());
    queue.pop_front();
    for (VertexId c : conn) {
      const VertexId v = graph.id(u + graph.vertex(c));
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == *count;
}

SandwichReport sandwich_inequality(std::uint64_t vertices, std::uint64_t alpha,
                                   std::uint64_t omega) {
  if (alpha == 0)
    throw UsageError("independence number must be positive");
  const auto prod = static_cast<unsigned __int128>(alpha) * omega;
  return {vertices,
          alpha,
          omega,
          (vertices + alpha - 1) / alpha,
          prod <= vertices,
          prod == vertices};
}

} // namespace zhmat

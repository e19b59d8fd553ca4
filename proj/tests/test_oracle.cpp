#include <gtest/gtest.h>

#include "zhmat/error.hpp"
#include "zhmat/oracle.hpp"
#include "zhmat/smith.hpp"

using namespace zhmat;

namespace {

oracle::AdjacencyMatrix complete(std::size_t n) {
  oracle::AdjacencyMatrix adj(n, std::vector<bool>(n, true));
  for (std::size_t v = 0; v < n; ++v)
    adj[v][v] = false;
  return adj;
}

} // namespace

TEST(Oracle, OmegaExamples) {
  EXPECT_EQ(oracle::omega_via_minors(Ring(6), Mat::from_rows(6, {{2, 0}, {0, 3}})),
            (InvariantFactors{{{0, 1}, {0, 1}}}));
  EXPECT_EQ(oracle::omega_via_minors(Ring(12), Mat::identity(12, 2)),
            (InvariantFactors{{{0, 0}, {0, 0}}}));
  EXPECT_EQ(oracle::omega_via_minors(Ring(12), Mat(12, 2, 3)),
            (InvariantFactors{{{2, 2}, {1, 1}}}));
  // Distinguishes (1, 1) from (1, 2) over Z_4.
  EXPECT_EQ(oracle::omega_via_minors(Ring(4), scale(2, Mat::identity(4, 2))),
            (InvariantFactors{{{1, 1}}}));
  EXPECT_EQ(oracle::omega_via_minors(Ring(4), Mat::from_rows(4, {{2, 0}, {0, 0}})),
            (InvariantFactors{{{1, 2}}}));
  EXPECT_THROW(oracle::omega_via_minors(Ring(2), Mat(2, 5, 5)), BudgetExceeded);
}

TEST(Oracle, OmegaAgreesWithSmithExhaustively) {
  struct Case {
    std::uint64_t h;
    std::size_t m, n;
  };
  for (const Case c : {Case{4, 2, 2}, Case{6, 2, 2}, Case{6, 2, 3}, Case{8, 2, 2}, Case{9, 2, 2}}) {
    const Ring ring(c.h);
    const std::uint64_t count = *matrix_space_size(c.h, c.m, c.n);
    for (std::uint64_t k = 0; k < count; ++k) {
      const Mat a = matrix_at(c.h, c.m, c.n, k);
      ASSERT_EQ(oracle::omega_via_minors(ring, a), invariant_factors(ring, a)) << c.h << ' ' << k;
    }
  }
}

TEST(Oracle, OmegaAgreesWithSmithOnSamples) {
  for (std::uint64_t h : {12, 72}) {
    const Ring ring(h);
    Rng rng(h);
    for (int k = 0; k < 3000; ++k) {
      const Mat a = random_matrix(h, 3, 3, rng);
      ASSERT_EQ(oracle::omega_via_minors(ring, a), invariant_factors(ring, a));
      const Mat b = random_matrix(h, 4, 2, rng);
      ASSERT_EQ(oracle::omega_via_minors(ring, b), invariant_factors(ring, b));
    }
  }
}

TEST(Oracle, FactorizationRankExamples) {
  const Ring z6(6), z5(5);
  EXPECT_EQ(oracle::inner_rank_by_factorization(z6, Mat(6, 2, 2)), 0u);
  EXPECT_EQ(oracle::inner_rank_by_factorization(z5, Mat::from_rows(5, {{3}})), 1u);
  EXPECT_EQ(oracle::inner_rank_by_factorization(z6, Mat::from_rows(6, {{2, 0}, {0, 3}})), 1u);
  EXPECT_THROW(oracle::inner_rank_by_factorization(Ring(12), Mat::identity(12, 3), 1000),
               BudgetExceeded);
}

TEST(Oracle, FactorizationRankAgreesWithOmega) {
  for (std::uint64_t h : {4, 6}) {
    const Ring ring(h);
    for (std::uint64_t k = 0; k < h * h * h * h; ++k) {
      const Mat a = matrix_at(h, 2, 2, k);
      ASSERT_EQ(oracle::inner_rank_by_factorization(ring, a), inner_rank(ring, a));
    }
  }
  const Ring ring(4);
  for (std::uint64_t k = 0; k < 4096; ++k) {
    const Mat a = matrix_at(4, 2, 3, k);
    ASSERT_EQ(oracle::inner_rank_by_factorization(ring, a), inner_rank(ring, a));
  }
}

TEST(Oracle, ProductsThroughCountRankAtMostR) {
  const Ring ring(6);
  const auto through1 = oracle::products_through(ring, 2, 2, 1);
  std::size_t low = 0;
  for (std::uint64_t k = 0; k < 1296; ++k)
    low += inner_rank(ring, matrix_at(6, 2, 2, k)) <= 1;
  EXPECT_EQ(through1.size(), low);
  EXPECT_EQ(oracle::products_through(ring, 2, 2, 0), std::vector<std::uint64_t>{0});
}

TEST(Oracle, CliqueSearchExamples) {
  EXPECT_EQ(oracle::exact_clique(complete(4)).size(), 4u);
  EXPECT_EQ(oracle::exact_mis(complete(4)).size(), 1u);
  const oracle::AdjacencyMatrix empty(5, std::vector<bool>(5, false));
  EXPECT_EQ(oracle::exact_mis(empty), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(oracle::exact_clique(empty).size(), 1u);
  // 5-cycle: clique 2, independent set 2.
  oracle::AdjacencyMatrix c5(5, std::vector<bool>(5, false));
  for (std::size_t v = 0; v < 5; ++v)
    c5[v][(v + 1) % 5] = c5[(v + 1) % 5][v] = true;
  EXPECT_EQ(oracle::exact_clique(c5).size(), 2u);
  EXPECT_EQ(oracle::exact_mis(c5).size(), 2u);
  EXPECT_THROW(oracle::exact_clique(complete(300)), BudgetExceeded);
}

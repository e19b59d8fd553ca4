#include <gtest/gtest.h>

#include "zhmat/bilgraph.hpp"
#include "zhmat/error.hpp"
#include "zhmat/oracle.hpp"
#include "zhmat/smith.hpp"

using namespace zhmat;

TEST(BilGraph, SpecValidation) {
  EXPECT_THROW(GraphSpec({6, 3, 2, 1}).validate(), UsageError);
  EXPECT_THROW(GraphSpec({6, 2, 2, 0}).validate(), UsageError);
  EXPECT_THROW(GraphSpec({6, 2, 2, 3}).validate(), UsageError);
  EXPECT_NO_THROW(GraphSpec({6, 2, 3, 2}).validate());
}

TEST(BilGraph, AdjacencyExamples) {
  const BilGraph g({6, 2, 2, 1});
  const Mat a = Mat::from_rows(6, {{1, 4}, {5, 0}});
  EXPECT_FALSE(g.adjacent(a, a));
  EXPECT_TRUE(g.adjacent(a + Mat::from_rows(6, {{2, 0}, {0, 3}}), a));
  EXPECT_FALSE(g.adjacent(a + Mat::identity(6, 2), a));
  EXPECT_THROW(g.adjacent(Mat(6, 2, 3), Mat(6, 2, 3)), UsageError);
}

TEST(BilGraph, IdArithmeticMatchesMatrices) {
  const BilGraph g({12, 2, 2, 1});
  Rng rng(1);
  for (int k = 0; k < 2000; ++k) {
    const Mat a = random_matrix(12, 2, 2, rng), b = random_matrix(12, 2, 2, rng);
    ASSERT_EQ(g.add(g.id(a), g.id(b)), g.id(a + b));
    ASSERT_EQ(g.sub(g.id(a), g.id(b)), g.id(a - b));
    ASSERT_EQ(g.rank(g.id(a)), inner_rank(g.ring(), a));
  }
}

TEST(BilGraph, SymmetricIrreflexiveRegular) {
  for (std::uint64_t h : {2, 3, 4, 6}) {
    const BilGraph g({h, 2, 2, 1});
    const BuiltGraph built = build_graph(g);
    ASSERT_TRUE(built.materialized());
    for (VertexId u = 0; u < built.vertex_count(); ++u) {
      ASSERT_FALSE(built.adjacent(u, u));
      for (VertexId v = 0; v < built.vertex_count(); ++v)
        ASSERT_EQ(built.adjacent(u, v), built.adjacent(v, u));
    }
    EXPECT_TRUE(built.regular());
    EXPECT_EQ(built.degrees().front(), g.degree());
  }
}

TEST(BilGraph, DegreeMatchesFactorizationEnumeration) {
  for (std::uint64_t h : {2, 3, 4, 6}) {
    const BilGraph g({h, 2, 2, 1});
    const auto products = oracle::products_through(g.ring(), 2, 2, 1);
    EXPECT_EQ(g.degree(), products.size() - 1) << h;
  }
  // Frozen after the enumeration above: 9 nonzero rank-one 2x2 matrices over Z_2,
  // and (1 + 9)(1 + 32) - 1 over Z_6.
  EXPECT_EQ(BilGraph({2, 2, 2, 1}).degree(), 9u);
  EXPECT_EQ(BilGraph({6, 2, 2, 1}).degree(), 329u);
}

TEST(BilGraph, FullRankGraphIsComplete) {
  const BilGraph g({3, 2, 2, 2});
  const BuiltGraph built = build_graph(g);
  EXPECT_EQ(g.degree(), built.vertex_count() - 1);
  EXPECT_EQ(exact_clique_number(g), 81u);
  EXPECT_EQ(exact_independence_number(g), 1u);
  EXPECT_TRUE(check_connectivity(g));
}

TEST(BilGraph, ExactNumbersMatchFormulas) {
  for (std::uint64_t h : {2, 3}) {
    const GraphSpec spec{h, 2, 2, 1};
    const BilGraph g(spec);
    EXPECT_EQ(exact_clique_number(g), *clique_number_formula(spec));
    EXPECT_EQ(exact_independence_number(g), *independence_number_formula(spec));
    EXPECT_EQ(exact_clique_number(g), h * h);
  }
  const BilGraph g5({5, 2, 2, 1});
  EXPECT_THROW(exact_clique_number(g5), BudgetExceeded);
}

TEST(BilGraph, OracleModeAboveMaterializeBudget) {
  const BilGraph g({12, 2, 2, 1});
  const BuiltGraph built = build_graph(g);
  EXPECT_FALSE(built.materialized());
  EXPECT_EQ(built.vertex_count(), 20736u);
  EXPECT_EQ(built.adjacent(0, g.id(Mat::from_rows(12, {{1, 0}, {0, 0}}))), true);
  EXPECT_THROW(built.bits(), BudgetExceeded);
}

TEST(BilGraph, Connectivity) {
  for (std::uint64_t h : {2, 3, 6})
    EXPECT_TRUE(check_connectivity(BilGraph({h, 2, 2, 1}))) << h;
  EXPECT_TRUE(check_connectivity(BilGraph({4, 2, 3, 1})));
}

TEST(BilGraph, Transitivity) {
  for (std::uint64_t h : {2, 6, 12}) {
    const TransitivityReport rep = check_vertex_transitivity(BilGraph({h, 2, 2, 1}), 1000, h);
    EXPECT_TRUE(rep.ok()) << h;
    EXPECT_EQ(rep.samples, 1000u);
    EXPECT_GT(rep.adjacent_pairs, 0u);
  }
}

TEST(BilGraph, Sandwich) {
  const SandwichReport a = sandwich_inequality(16, 4, 4);
  EXPECT_TRUE(a.holds && a.tight);
  EXPECT_EQ(a.chi_lower_bound, 4u);
  const SandwichReport b = sandwich_inequality(1296, 36, 36);
  EXPECT_TRUE(b.holds && b.tight);
  const SandwichReport c = sandwich_inequality(81, 1, 81);
  EXPECT_TRUE(c.holds && c.tight);
  EXPECT_FALSE(sandwich_inequality(16, 4, 5).holds);
}

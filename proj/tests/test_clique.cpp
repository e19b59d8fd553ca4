#include <gtest/gtest.h>

#include <set>

#include "zhmat/clique.hpp"
#include "zhmat/error.hpp"
#include "zhmat/smith.hpp"

using namespace zhmat;

namespace {

std::vector<Mat> canonical(std::uint64_t h, std::size_t m, std::size_t n, std::size_t r,
                           std::vector<unsigned> alpha) {
  return build_canonical_clique(Ring(h), {{h, m, n, r}, std::move(alpha)});
}

} // namespace

TEST(Clique, CanonicalSizes) {
  for (std::uint64_t h : {2, 3, 4, 6, 12}) {
    const Ring ring(h);
    std::vector<unsigned> zero(ring.component_count(), 0);
    for (std::size_t n : {2, 3}) {
      const auto c = canonical(h, 2, n, 1, zero);
      EXPECT_EQ(c.size(), *clique_number_formula({h, 2, n, 1}));
      EXPECT_TRUE(is_clique(BilGraph({h, 2, n, 1}), c));
    }
  }
  const auto mixed = canonical(6, 2, 2, 1, {0, 1});
  EXPECT_EQ(mixed.size(), 36u);
  EXPECT_TRUE(is_clique(BilGraph({6, 2, 2, 1}), mixed));
  EXPECT_EQ(canonical(12, 2, 2, 1, {2, 0}).size(), 144u);
  EXPECT_EQ(canonical(8, 3, 3, 2, {3}).size(), 8u * 8 * 8 * 8 * 8 * 8);
}

TEST(Clique, CanonicalShapes) {
  for (const Mat &a : canonical(6, 2, 3, 1, {0, 0}))
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(a(1, j), 0u);
  for (const Mat &a : canonical(6, 2, 2, 1, {1, 1}))
    for (std::size_t i = 0; i < 2; ++i)
      EXPECT_EQ(a(i, 1), 0u);
  EXPECT_THROW(canonical(6, 2, 3, 1, {1, 0}), UsageError);
  EXPECT_THROW(canonical(12, 2, 2, 1, {1, 0}), UsageError);
}

TEST(Clique, IsCliqueWitness) {
  const BilGraph g({12, 2, 2, 1});
  const std::vector<Mat> single{Mat::identity(12, 2)};
  EXPECT_TRUE(is_clique(g, single));
  auto family = canonical(12, 2, 2, 1, {0, 0});
  EXPECT_TRUE(is_clique(g, family));
  family.push_back(Mat::from_rows(12, {{0, 0}, {0, 5}}) + Mat::identity(12, 2));
  const auto pair = find_non_adjacent_pair(g, family);
  ASSERT_TRUE(pair.has_value());
  EXPECT_GT(inner_rank(g.ring(), family[pair->first] - family[pair->second]), 1u);
  EXPECT_FALSE(is_clique(g, family));
}

TEST(Clique, ClassifiesGeneratedForms) {
  struct Case {
    std::uint64_t h;
    CliqueKind kind;
    std::vector<unsigned> alpha;
  };
  const std::vector<Case> cases{{6, CliqueKind::Row, {}},    {6, CliqueKind::Col, {}},
                                {6, CliqueKind::Mixed, {0, 1}}, {6, CliqueKind::Mixed, {1, 0}},
                                {12, CliqueKind::Row, {}},   {12, CliqueKind::Col, {}},
                                {12, CliqueKind::Mixed, {2, 0}}, {12, CliqueKind::Mixed, {0, 1}}};
  Rng rng(2024);
  for (const auto &c : cases) {
    const BilGraph g({c.h, 2, 2, 1});
    for (int k = 0; k < 100; ++k) {
      const CliqueForm gen = random_clique_form(g.ring(), g.spec(), c.kind, c.alpha, rng);
      const auto family = rebuild_clique(g.ring(), g.spec(), gen);
      ASSERT_EQ(family.size(), c.h * c.h);
      const CliqueForm got = classify_max_clique(g, family);
      ASSERT_EQ(got.kind, c.kind);
      ASSERT_EQ(got.B0, family.front());
      ASSERT_EQ(rebuild_clique(g.ring(), g.spec(), got), family);
      if (c.kind == CliqueKind::Mixed)
        ASSERT_EQ(form_alpha(g.ring(), got), c.alpha);
    }
  }
}

TEST(Clique, RectangularClassifiesAsRowOnly) {
  const BilGraph g({6, 2, 3, 1});
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto family =
        rebuild_clique(g.ring(), g.spec(), random_clique_form(g.ring(), g.spec(), CliqueKind::Row, {}, rng));
    ASSERT_EQ(classify_max_clique(g, family).kind, CliqueKind::Row);
  }
  EXPECT_THROW(random_clique_form(g.ring(), g.spec(), CliqueKind::Col, {}, rng), UsageError);
}

TEST(Clique, ClassifierRejectsNonMaximumFamilies) {
  const BilGraph g({6, 2, 2, 1});
  auto family = canonical(6, 2, 2, 1, {0, 0});
  family.pop_back();
  EXPECT_THROW(classify_max_clique(g, family), UsageError);
  family.push_back(Mat::identity(6, 2));
  EXPECT_THROW(classify_max_clique(g, family), UsageError);
}

// Every maximum clique is a translate of a row or column family: compare the
// enumerated cliques with all generated S * C(0) + B0 and C(s) * T + B0.
TEST(Clique, EnumerationEqualsGeneratedFamilies) {
  for (std::uint64_t h : {2, 3}) {
    const BilGraph g({h, 2, 2, 1});
    const Ring &ring = g.ring();
    std::set<std::vector<Mat>> generated;
    for (std::uint64_t k = 0; k < h * h * h * h; ++k) {
      const Mat s = matrix_at(h, 2, 2, k);
      if (!is_invertible(ring, s))
        continue;
      for (std::uint64_t b = 0; b < h * h * h * h; ++b) {
        const Mat b0 = matrix_at(h, 2, 2, b);
        generated.insert(rebuild_clique(ring, g.spec(), {CliqueKind::Row, s, std::nullopt, std::nullopt, b0}));
        generated.insert(rebuild_clique(ring, g.spec(), {CliqueKind::Col, std::nullopt, s, std::nullopt, b0}));
      }
    }
    const auto enumerated = enumerate_max_cliques(g);
    std::set<std::vector<Mat>> found;
    for (const auto &family : enumerated) {
      const CliqueForm form = classify_max_clique(g, family);
      EXPECT_NE(form.kind, CliqueKind::Mixed);
      found.insert(normalize_family(g.spec(), family));
    }
    EXPECT_EQ(found.size(), enumerated.size());
    EXPECT_EQ(found, generated) << h;
  }
  // Row and column families over a field: (h + 1) subspaces times h^2 cosets each.
  EXPECT_EQ(enumerate_max_cliques(BilGraph({2, 2, 2, 1})).size(), 2u * 3 * 4);
}

TEST(Clique, FullRankGraphHasSingleMaximumClique) {
  const BilGraph g({2, 2, 2, 2});
  const auto cliques = enumerate_max_cliques(g);
  ASSERT_EQ(cliques.size(), 1u);
  EXPECT_EQ(cliques.front().size(), 16u);
  EXPECT_EQ(classify_max_clique(g, cliques.front()).kind, CliqueKind::Row);
}

TEST(Clique, Ekr) {
  const BilGraph g({12, 2, 2, 1});
  const auto family = canonical(12, 2, 2, 1, {0, 0});
  const EkrReport full = verify_ekr(g, family);
  EXPECT_TRUE(full.extremal && full.within_bound);
  ASSERT_TRUE(full.form.has_value());
  EXPECT_EQ(full.form->kind, CliqueKind::Row);

  std::vector<Mat> subset(family.begin(), family.end() - 1);
  const EkrReport part = verify_ekr(g, subset);
  EXPECT_TRUE(part.within_bound);
  EXPECT_FALSE(part.extremal);
  EXPECT_TRUE(is_clique(g, subset));

  auto bigger = family;
  bigger.push_back(Mat::from_rows(12, {{0, 0}, {1, 0}}));
  EXPECT_THROW(verify_ekr(g, bigger), UsageError);
}

TEST(Clique, KindNames) {
  for (CliqueKind k : {CliqueKind::Row, CliqueKind::Col, CliqueKind::Mixed})
    EXPECT_EQ(clique_kind_from_string(to_string(k)), k);
  EXPECT_EQ(clique_kind_from_string("col"), CliqueKind::Col);
  EXPECT_FALSE(clique_kind_from_string("diagonal").has_value());
}

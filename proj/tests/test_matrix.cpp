#include <gtest/gtest.h>

#include <set>

#include "zhmat/error.hpp"
#include "zhmat/matrix.hpp"

using namespace zhmat;

TEST(Matrix, Identities) {
  const Mat a = Mat::from_rows(12, {{1, 5}, {7, 11}});
  EXPECT_EQ(a + Mat(12, 2, 2), a);
  EXPECT_EQ(Mat::identity(12, 2) * a, a);
  EXPECT_EQ(a - a, Mat(12, 2, 2));
  EXPECT_EQ(-a, Mat::from_rows(12, {{11, 7}, {5, 1}}));
  EXPECT_EQ(Mat::from_rows(6, {{2, 0}, {0, 3}}) * Mat::from_rows(6, {{3, 0}, {0, 2}}), Mat(6, 2, 2));
  EXPECT_THROW(a * Mat(12, 3, 3), UsageError);
}

TEST(Matrix, FromRowsReducesSignedValues) {
  EXPECT_EQ(Mat::from_rows(6, {{-1, 7}}), Mat::from_rows(6, {{5, 1}}));
  EXPECT_THROW(Mat::from_entries(6, 1, 2, {6, 0}), UsageError);
}

TEST(Matrix, DeterminantExamples) {
  const Ring z6(6), z12(12);
  EXPECT_EQ(det(Ring(7), Mat::identity(7, 3)), 1u);
  EXPECT_EQ(det(z6, Mat::from_rows(6, {{2, 0}, {0, 3}})), 0u);
  EXPECT_EQ(det(z12, Mat::from_rows(12, {{1, 1}, {0, 5}})), 5u);
  EXPECT_THROW(det(z12, Mat(12, 2, 3)), UsageError);
}

TEST(Matrix, DeterminantMatchesCofactorFormulaOn2x2) {
  for (std::uint64_t h : {4, 6, 8, 9, 12}) {
    const Ring ring(h);
    for (std::uint64_t k = 0; k < h * h * h * h; ++k) {
      const Mat a = matrix_at(h, 2, 2, k);
      const Residue expected = ring.sub(ring.mul(a(0, 0), a(1, 1)), ring.mul(a(0, 1), a(1, 0)));
      ASSERT_EQ(det(ring, a), expected) << h << ' ' << k;
    }
  }
}

TEST(Matrix, DeterminantIsMultiplicative) {
  for (std::uint64_t h : {4, 6, 12, 36, 60}) {
    const Ring ring(h);
    Rng rng(h);
    for (int k = 0; k < 1000; ++k) {
      const Mat a = random_matrix(h, 3, 3, rng), b = random_matrix(h, 3, 3, rng);
      ASSERT_EQ(det(ring, a * b), ring.mul(det(ring, a), det(ring, b)));
    }
  }
}

TEST(Matrix, Invertibility) {
  const Ring z12(12);
  EXPECT_TRUE(is_invertible(z12, Mat::identity(12, 2)));
  EXPECT_FALSE(is_invertible(z12, Mat::from_rows(12, {{2, 0}, {0, 1}})));
  EXPECT_TRUE(is_invertible(z12, Mat::from_rows(12, {{1, 1}, {0, 5}})));
}

TEST(Matrix, InvertibleIffTwoSidedInverseExists) {
  for (std::uint64_t h = 2; h <= 6; ++h) {
    const Ring ring(h);
    const Mat id = Mat::identity(h, 2);
    std::vector<Mat> all;
    for (std::uint64_t k = 0; k < h * h * h * h; ++k)
      all.push_back(matrix_at(h, 2, 2, k));
    for (const Mat &a : all) {
      bool has_inverse = false;
      for (const Mat &b : all)
        if (a * b == id && b * a == id) {
          has_inverse = true;
          EXPECT_EQ(inverse(ring, a), b);
        }
      ASSERT_EQ(is_invertible(ring, a), has_inverse);
      if (!has_inverse)
        EXPECT_FALSE(inverse(ring, a).has_value());
    }
  }
}

TEST(Matrix, ProjectionExamples) {
  const Ring z12(12);
  const Mat a = scale(8, Mat::identity(12, 2));
  EXPECT_EQ(project_mat(z12, a, 0), Mat(4, 2, 2));
  EXPECT_EQ(project_mat(z12, a, 1), scale(2, Mat::identity(3, 2)));
  EXPECT_EQ(coproject_mat(z12, a, 1), Mat(4, 2, 2));
  EXPECT_THROW(coproject_mat(Ring(8), Mat(8, 1, 1), 0), UsageError);
}

TEST(Matrix, CrtLiftExamples) {
  const Ring z12(12);
  const std::vector<Mat> ids{Mat::identity(4, 2), Mat::identity(3, 2)};
  const std::vector<Mat> zeros{Mat(4, 2, 2), Mat(3, 2, 2)};
  const std::vector<Mat> mixed{Mat::identity(4, 2), scale(2, Mat::identity(3, 2))};
  EXPECT_EQ(crt_lift_mat(z12, ids), Mat::identity(12, 2));
  EXPECT_EQ(crt_lift_mat(z12, zeros), Mat(12, 2, 2));
  EXPECT_EQ(crt_lift_mat(z12, mixed), scale(5, Mat::identity(12, 2)));
}

TEST(Matrix, CrtLiftIsBijective) {
  for (std::uint64_t h = 2; h <= 12; ++h) {
    const Ring ring(h);
    for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 2}}) {
      const std::uint64_t count = *matrix_space_size(h, m, n);
      std::set<std::vector<Mat>> images;
      for (std::uint64_t k = 0; k < count; ++k) {
        const Mat a = matrix_at(h, m, n, k);
        std::vector<Mat> parts;
        for (std::size_t i = 0; i < ring.component_count(); ++i)
          parts.push_back(project_mat(ring, a, i));
        ASSERT_EQ(crt_lift_mat(ring, parts), a);
        images.insert(parts);
      }
      EXPECT_EQ(images.size(), count);
    }
  }
}

TEST(Matrix, LiftOfInvertibleComponentsIsInvertible) {
  const Ring ring(60);
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    std::vector<Mat> parts;
    for (const auto &c : ring.components())
      parts.push_back(random_invertible(Ring(c.q), 3, rng));
    EXPECT_TRUE(is_invertible(ring, crt_lift_mat(ring, parts)));
  }
}

TEST(Matrix, RandomInvertible) {
  const Ring z12(12);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Mat u = random_invertible(z12, 1, seed);
    EXPECT_TRUE(z12.is_unit(u(0, 0)));
    EXPECT_EQ(random_invertible(z12, 3, seed), random_invertible(z12, 3, seed));
    EXPECT_TRUE(is_invertible(z12, random_invertible(z12, 3, seed)));
  }
}

TEST(Matrix, GL2OfZ2HasSixElements) {
  const Ring z2(2);
  int invertible = 0;
  for (std::uint64_t k = 0; k < 16; ++k)
    invertible += is_invertible(z2, matrix_at(2, 2, 2, k));
  EXPECT_EQ(invertible, 6);
}

TEST(Matrix, IndexRoundTrip) {
  for (std::uint64_t k = 0; k < 1296; ++k)
    ASSERT_EQ(matrix_index(matrix_at(6, 2, 2, k)), k);
  EXPECT_EQ(matrix_at(6, 2, 2, 1), Mat::from_rows(6, {{0, 0}, {0, 1}}));
  EXPECT_FALSE(matrix_space_size(1000, 8, 8).has_value());
}

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "zhmat/error.hpp"
#include "zhmat/orbits.hpp"

using namespace zhmat;

TEST(Orbits, LabelCounts) {
  EXPECT_EQ(enumerate_orbit_labels(Ring(12), 2, 2).size(), 18u);
  EXPECT_EQ(enumerate_orbit_labels(Ring(5), 2, 3).size(), 3u);
  EXPECT_EQ(enumerate_orbit_labels(Ring(4), 2, 2).size(), 6u);
  for (std::uint64_t h = 2; h <= 60; ++h)
    for (std::size_t m = 1; m <= 3; ++m) {
      const Ring ring(h);
      const auto labels = enumerate_orbit_labels(ring, m, 3);
      EXPECT_EQ(labels.size(), expected_label_count(ring, m, 3));
      EXPECT_EQ(std::set<OrbitLabel>(labels.begin(), labels.end()).size(), labels.size());
      for (const auto &l : labels)
        EXPECT_TRUE(is_well_formed(ring, l));
    }
}

TEST(Orbits, CensusMatchesLabelCountEverywhereWithinBudget) {
  for (std::uint64_t h = 2; h <= 12; ++h)
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = m; n <= 3; ++n) {
        const Ring ring(h);
        const auto size = matrix_space_size(h, m, n);
        if (!size || *size > 300'000)
          continue;
        const CensusReport rep = census_by_enumeration(ring, m, n);
        EXPECT_EQ(rep.entries.size(), expected_label_count(ring, m, n)) << h << m << n;
        EXPECT_EQ(rep.total, *size);
        for (const auto &e : rep.entries)
          EXPECT_GT(e.length, 0u);
      }
}

TEST(Orbits, CensusExamples) {
  const CensusReport z6 = census_by_enumeration(Ring(6), 2, 2);
  EXPECT_EQ(z6.entries.size(), 9u);
  EXPECT_EQ(z6.total, 1296u);
  const CensusReport z2 = census_by_enumeration(Ring(2), 1, 1);
  ASSERT_EQ(z2.entries.size(), 2u);
  EXPECT_EQ(z2.length_of({{{0}}}), 1u);
  EXPECT_EQ(z2.length_of({{{1}}}), 1u);
  const CensusReport z4 = census_by_enumeration(Ring(4), 1, 1);
  EXPECT_EQ(z4.length_of({{{0}}}), 2u);
  EXPECT_EQ(z4.length_of({{{1}}}), 1u);
  EXPECT_EQ(z4.length_of({{{2}}}), 1u);
}

TEST(Orbits, ThreadedCensusIsIdentical) {
  const Ring ring(12);
  const CensusReport one = census_by_enumeration(ring, 2, 2, kDefaultCensusBudget, 1);
  const CensusReport four = census_by_enumeration(ring, 2, 2, kDefaultCensusBudget, 4);
  ASSERT_EQ(one.entries.size(), four.entries.size());
  for (std::size_t k = 0; k < one.entries.size(); ++k) {
    EXPECT_EQ(one.entries[k].label, four.entries[k].label);
    EXPECT_EQ(one.entries[k].length, four.entries[k].length);
  }
}

TEST(Orbits, BudgetIsEnforced) {
  EXPECT_THROW(census_by_enumeration(Ring(6), 2, 2, 1000), BudgetExceeded);
}

TEST(Orbits, LengthProduct) {
  for (std::uint64_t h : {6, 12, 10}) {
    const OrbitProductCheck chk = verify_orbit_product(Ring(h), 2, 2);
    EXPECT_TRUE(chk.holds) << h;
    EXPECT_EQ(chk.rows.size(), expected_label_count(Ring(h), 2, 2));
    EXPECT_FALSE(chk.first_violation.has_value());
  }
  EXPECT_TRUE(verify_orbit_product(Ring(9), 2, 2).holds);
}

// Two matrices with the same label are related by an explicit (P, Q).
TEST(Orbits, SameLabelMeansEquivalent) {
  for (std::uint64_t h : {2, 3, 4}) {
    const Ring ring(h);
    std::vector<Mat> gl;
    for (std::uint64_t k = 0; k < h * h * h * h; ++k)
      if (is_invertible(ring, matrix_at(h, 2, 2, k)))
        gl.push_back(matrix_at(h, 2, 2, k));
    std::map<OrbitLabel, std::set<Mat>> orbit_of_rep;
    std::map<OrbitLabel, Mat> reps;
    for (std::uint64_t k = 0; k < h * h * h * h; ++k) {
      const Mat a = matrix_at(h, 2, 2, k);
      reps.emplace(invariant_factors(ring, a), a);
    }
    for (const auto &[label, rep] : reps) {
      std::set<Mat> orbit;
      for (const Mat &p : gl)
        for (const Mat &q : gl)
          orbit.insert(p * rep * q);
      for (const Mat &b : orbit)
        ASSERT_EQ(invariant_factors(ring, b), label);
      EXPECT_EQ(orbit.size(), census_by_enumeration(ring, 2, 2).length_of(label));
    }
  }
}

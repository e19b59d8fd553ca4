#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "zhmat/error.hpp"
#include "zhmat/ring.hpp"

using namespace zhmat;

namespace {

std::vector<unsigned> v(std::initializer_list<unsigned> xs) { return xs; }

// Every exponent vector 0 <= e_i <= s_i.
std::vector<std::vector<unsigned>> all_exponents(const Ring &ring) {
  std::vector<std::vector<unsigned>> out{{}};
  for (const auto &c : ring.components()) {
    std::vector<std::vector<unsigned>> next;
    for (const auto &prefix : out)
      for (unsigned e = 0; e <= c.s; ++e) {
        auto x = prefix;
        x.push_back(e);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

} // namespace

TEST(Ring, FactorsModulusAscending) {
  const Ring r(360);
  ASSERT_EQ(r.component_count(), 3u);
  EXPECT_EQ(r.component(0), (PrimePower{2, 3, 8}));
  EXPECT_EQ(r.component(1), (PrimePower{3, 2, 9}));
  EXPECT_EQ(r.component(2), (PrimePower{5, 1, 5}));
  EXPECT_EQ(r.saturated_exponents(), v({3, 2, 1}));
  EXPECT_THROW(Ring(1), UsageError);
  EXPECT_THROW(r.component(3), UsageError);
}

TEST(Ring, UnitsOfZ12) {
  const Ring r(12);
  EXPECT_TRUE(r.is_unit(5));
  EXPECT_FALSE(r.is_unit(0));
  EXPECT_EQ(r.unit_count(), 4u);
}

TEST(Ring, UnitCountMatchesGcdCount) {
  for (std::uint64_t h = 2; h <= 60; ++h) {
    const Ring r(h);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < h; ++x)
      count += std::gcd(x, h) == 1;
    EXPECT_EQ(r.unit_count(), count) << h;
  }
}

TEST(Ring, FactorElementExamples) {
  const Ring r(12);
  EXPECT_EQ(r.factor_element(8), (ElemFactorization{5, {2, 0}, false}));
  EXPECT_EQ(r.factor_element(1), (ElemFactorization{1, {0, 0}, false}));
  const auto zero = r.factor_element(0);
  EXPECT_TRUE(zero.is_zero);
  EXPECT_EQ(zero.exponents, v({2, 1}));
}

TEST(Ring, FactorElementUnitIsSmallestByExhaustiveSearch) {
  for (std::uint64_t h = 2; h <= 60; ++h) {
    const Ring r(h);
    for (Residue x = 1; x < h; ++x) {
      const auto f = r.factor_element(x);
      const Residue base = r.prime_product(f.exponents);
      Residue smallest = h;
      for (Residue u = 1; u < h && smallest == h; ++u)
        if (r.is_unit(u) && r.mul(u, base) == x)
          smallest = u;
      EXPECT_EQ(f.unit, smallest) << h << ' ' << x;
    }
  }
}

TEST(Ring, ExponentVectorIsUnique) {
  for (std::uint64_t h = 2; h <= 60; ++h) {
    const Ring r(h);
    for (Residue x = 1; x < h; ++x) {
      std::set<std::vector<unsigned>> witnesses;
      for (const auto &e : all_exponents(r)) {
        const Residue base = r.prime_product(e);
        for (Residue u = 1; u < h; ++u)
          if (r.is_unit(u) && r.mul(u, base) == x)
            witnesses.insert(e);
      }
      ASSERT_EQ(witnesses.size(), 1u) << h << ' ' << x;
      EXPECT_EQ(*witnesses.begin(), r.factor_element(x).exponents);
    }
  }
}

TEST(Ring, AbsorbSaturatedExponents) {
  const Ring r(12);
  const auto b30 = v({3, 0}), b10 = v({1, 0}), b21 = v({2, 1});
  EXPECT_EQ(r.absorb_saturated_exponents(b30), std::make_pair(Residue{5}, v({2, 0})));
  EXPECT_EQ(r.absorb_saturated_exponents(b10), std::make_pair(Residue{1}, v({1, 0})));
  EXPECT_THROW(r.absorb_saturated_exponents(b21), UsageError);
}

TEST(Ring, Associates) {
  const Ring r(12);
  EXPECT_TRUE(r.are_associates(8, 4));
  EXPECT_TRUE(r.are_associates(7, 7));
  EXPECT_FALSE(r.are_associates(2, 3));
}

TEST(Ring, AssociateClassesMatchExponentVectors) {
  for (std::uint64_t h = 2; h <= 60; ++h) {
    const Ring r(h);
    std::set<std::vector<unsigned>> classes;
    for (Residue x = 0; x < h; ++x)
      classes.insert(r.factor_element(x).exponents);
    std::size_t expected = 1;
    for (const auto &c : r.components())
      expected *= c.s + 1;
    EXPECT_EQ(classes.size(), expected) << h;
    for (Residue a = 0; a < h; ++a)
      for (Residue b = 0; b < h; ++b) {
        bool unit_relates = false;
        for (Residue u = 1; u < h && !unit_relates; ++u)
          unit_relates = r.is_unit(u) && r.mul(u, a) == b;
        ASSERT_EQ(r.are_associates(a, b), unit_relates) << h << ' ' << a << ' ' << b;
      }
  }
}

TEST(Ring, IdealMembershipIsComponentwiseExponentOrder) {
  for (std::uint64_t h = 2; h <= 60; ++h) {
    const Ring r(h);
    for (Residue x = 0; x < h; ++x) {
      const IdealLabel ideal = r.ideal_of(x);
      std::set<Residue> multiples;
      for (Residue y = 0; y < h; ++y)
        multiples.insert(r.mul(x, y));
      const auto listed = r.ideal_elements(ideal);
      EXPECT_EQ(std::set<Residue>(listed.begin(), listed.end()), multiples);
      for (Residue y = 0; y < h; ++y) {
        const auto ey = r.factor_element(y).exponents;
        bool above = true;
        for (std::size_t i = 0; i < ey.size(); ++i)
          above = above && ey[i] >= ideal.exponents[i];
        ASSERT_EQ(r.in_ideal(y, ideal), above);
        ASSERT_EQ(multiples.contains(y), above);
      }
    }
  }
}

TEST(Ring, ProjectionsAndLift) {
  const Ring r(12);
  EXPECT_EQ(r.project(8, 0), 0u);
  EXPECT_EQ(r.project(8, 1), 2u);
  EXPECT_EQ(r.project(0, 1), 0u);
  EXPECT_EQ(r.coproject(8, 0), 2u);
  EXPECT_EQ(r.coproject(8, 1), 0u);
  EXPECT_EQ(r.coproject(1, 0), 1u);
  const std::vector<Residue> a{0, 2}, zeros{0, 0}, ones{1, 1};
  EXPECT_EQ(r.crt_lift(a), 8u);
  EXPECT_EQ(r.crt_lift(zeros), 0u);
  EXPECT_EQ(r.crt_lift(ones), 1u);
  EXPECT_THROW(r.project(1, 2), UsageError);
}

TEST(Ring, CrtIsBijective) {
  for (std::uint64_t h = 2; h <= 60; ++h) {
    const Ring r(h);
    std::set<std::vector<Residue>> images;
    for (Residue x = 0; x < h; ++x) {
      std::vector<Residue> parts;
      for (std::size_t i = 0; i < r.component_count(); ++i)
        parts.push_back(r.project(x, i));
      EXPECT_EQ(r.crt_lift(parts), x);
      images.insert(parts);
    }
    EXPECT_EQ(images.size(), h);
  }
}

TEST(Ring, ArithmeticNearTheModulusBound) {
  const Ring r(kMaxModulus - 1);
  const Residue big = kMaxModulus - 2;
  EXPECT_EQ(r.mul(big, big), 1u); // (-1)^2
  EXPECT_EQ(r.add(big, 1), 0u);
  EXPECT_EQ(r.sub(0, 1), big);
}

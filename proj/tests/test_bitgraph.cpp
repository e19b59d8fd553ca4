#include <gtest/gtest.h>

#include "zhmat/bitgraph.hpp"
#include "zhmat/error.hpp"
#include "zhmat/oracle.hpp"
#include "zhmat/rng.hpp"

using namespace zhmat;

namespace {

BitGraph random_graph(std::size_t n, unsigned percent, Rng &rng) {
  BitGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.below(100) < percent)
        g.add_edge(u, v);
  return g;
}

oracle::AdjacencyMatrix to_matrix(const BitGraph &g) {
  oracle::AdjacencyMatrix adj(g.size(), std::vector<bool>(g.size()));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      adj[u][v] = g.has_edge(u, v);
  return adj;
}

bool is_clique(const BitGraph &g, const std::vector<std::size_t> &vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.has_edge(vs[a], vs[b]))
        return false;
  return true;
}

} // namespace

TEST(BitGraph, EdgesAndComplement) {
  BitGraph g(70);
  g.add_edge(0, 69);
  g.add_edge(3, 64);
  EXPECT_TRUE(g.has_edge(69, 0));
  EXPECT_TRUE(g.has_edge(64, 3));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(g.degree(0), 1u);
  const BitGraph c = g.complement();
  EXPECT_FALSE(c.has_edge(0, 69));
  EXPECT_FALSE(c.has_edge(5, 5));
  EXPECT_EQ(c.degree(0), 68u);
}

TEST(BitGraph, MaximumCliqueMatchesOracle) {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const BitGraph g = random_graph(10 + trial % 40, 20 + (trial * 7) % 70, rng);
    const auto clique = maximum_clique(g);
    EXPECT_TRUE(is_clique(g, clique));
    EXPECT_EQ(clique.size(), oracle::exact_clique(to_matrix(g)).size()) << trial;
  }
}

TEST(BitGraph, MaximumCliqueIsDeterministic) {
  Rng rng(7);
  const BitGraph g = random_graph(60, 50, rng);
  EXPECT_EQ(maximum_clique(g), maximum_clique(g));
}

TEST(BitGraph, CliquesOfSizeEnumeratesAll) {
  // K_5 has C(5, 3) = 10 triangles.
  BitGraph k5(5);
  for (std::size_t u = 0; u < 5; ++u)
    for (std::size_t v = u + 1; v < 5; ++v)
      k5.add_edge(u, v);
  const auto triangles = cliques_of_size(k5, 3);
  EXPECT_EQ(triangles.size(), 10u);
  EXPECT_TRUE(cliques_of_size(k5, 6).empty());
  EXPECT_THROW(cliques_of_size(k5, 2, 5), BudgetExceeded);

  Rng rng(3);
  const BitGraph g = random_graph(14, 60, rng);
  std::size_t brute = 0;
  for (std::size_t mask = 0; mask < (1u << 14); ++mask) {
    if (__builtin_popcount(mask) != 4)
      continue;
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < 14; ++v)
      if (mask >> v & 1)
        vs.push_back(v);
    brute += is_clique(g, vs);
  }
  EXPECT_EQ(cliques_of_size(g, 4).size(), brute);
}

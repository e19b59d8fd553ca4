#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "zhmat/bilgraph.hpp"
#include "zhmat/field.hpp"
#include "zhmat/matrix.hpp"

namespace zhmat {

/// Minimum distance of a code with fewer than two members.
inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();
inline constexpr std::uint64_t kDefaultPairBudget = 100'000;
inline constexpr std::uint64_t kDefaultSpanBudget = 10'000'000;

/// A set of m x n matrices over Z_h with a claimed minimum inner-rank distance.
/// For linear codes `members` is the Z_h-span of `basis`.
struct RankCode {
  std::uint64_t h;
  std::size_t m, n;
  std::vector<Mat> members; // sorted, distinct
  std::vector<Mat> basis;
  std::size_t claimed_min_distance;
  bool linear;
};

/// All Z_h-combinations of the basis, sorted and distinct.
std::vector<Mat> span_members(std::uint64_t h, std::size_t m, std::size_t n,
                              std::span<const Mat> basis,
                              std::uint64_t budget = kDefaultSpanBudget);

/// Matrix expansion of the evaluation code of linearized polynomials of
/// q-degree < m - d + 1 at the points 1, x, ..., x^{m-1} of F_{p^n}: row j of
/// a codeword is the coordinate vector of f(x^j). Needs 1 <= d <= m <= n and
/// n equal to the field degree.
RankCode gabidulin_code(const FieldSpec &field, std::size_t m, std::size_t n, std::size_t d);

/// Z_{p^s}-span of the entrywise lifts of the basis of a linear code over
/// Z_p. The distance is re-verified; a shortfall raises VerificationFailure.
RankCode lift_code(const RankCode &code, unsigned s);

/// CRT product of one code per prime component of `ring`. The generating set
/// embeds each component basis through the CRT idempotents, so linearity is
/// preserved.
RankCode crt_combine(const Ring &ring, std::span<const RankCode> codes);

/// Exact minimum inner rank over nonzero differences (over nonzero members for
/// linear codes); kInfiniteDistance for codes with < 2 members.
std::size_t verify_distance(const Ring &ring, const RankCode &code,
                            std::uint64_t budget = kDefaultPairBudget);
/// Always compares all pairs, regardless of linearity.
std::size_t pairwise_min_distance(const Ring &ring, std::span<const Mat> members,
                                  std::uint64_t budget = kDefaultPairBudget);
/// Closed under addition and negation (full check).
bool is_additively_closed(std::span<const Mat> sorted_members);

/// A verified (r+1)-distance linear code of size h^{n(m-r)}: Gabidulin codes
/// per prime, lifted to p_i^{s_i}, combined by CRT. For r = m the code is {0}.
RankCode independent_set_from_code(const Ring &ring, const GraphSpec &spec);

struct Coloring {
  std::vector<std::uint32_t> color_of; // by vertex id
  std::size_t colors = 0;
  std::uint64_t edges_checked = 0;
  std::uint64_t monochromatic_edges = 0;
  bool proper() const { return monochromatic_edges == 0; }
};

/// Colours each vertex by its coset of the code subgroup, then checks every
/// edge. Needs a linear code and a graph with a rank table.
Coloring color_graph(const BilGraph &graph, const RankCode &code);

struct CliqueCover {
  std::vector<std::vector<VertexId>> parts;
  bool disjoint = false;
  bool covers = false;
  bool parts_are_cliques = false;
  bool ok() const { return disjoint && covers && parts_are_cliques; }
};

/// Translates S + C_r(0,...,0) for S in the code; with |code| = h^{n(m-r)}
/// these partition the vertex set into maximum cliques, which is a proper
/// colouring of the complement graph.
CliqueCover clique_cover_complement(const BilGraph &graph, const RankCode &code);

} // namespace zhmat

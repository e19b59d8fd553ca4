#include "zhmat/rankcode.hpp"

#include <algorithm>
#include <string>

#include "zhmat/clique.hpp"
#include "zhmat/error.hpp"
#include "zhmat/smith.hpp"

namespace zhmat {

std::vector<Mat> span_members(std::uint64_t h, std::size_t m, std::size_t n,
                              std::span<const Mat> basis, std::uint64_t budget) {
  const auto count = matrix_space_size(h, 1, basis.size());
  if (!count || *count > budget)
    throw BudgetExceeded("span enumeration exceeds the budget");
  std::vector<Mat> out;
  out.reserve(*count);
  std::vector<std::uint64_t> coeff(basis.size(), 0);
  for (std::uint64_t k = 0; k < *count; ++k) {
    Mat sum(h, m, n);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (coeff[b] != 0)
        sum = sum + scale(coeff[b], basis[b]);
    out.push_back(std::move(sum));
    for (std::size_t b = 0; b < basis.size() && ++coeff[b] == h; ++b)
      coeff[b] = 0;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RankCode gabidulin_code(const FieldSpec &field, std::size_t m, std::size_t n, std::size_t d) {
  if (!(1 <= d && d <= m && m <= n && n == field.n))
    throw UsageError("Gabidulin code needs 1 <= d <= m <= n = field degree");
  const GaloisField gf(field);
  const std::size_t dim = m - d + 1;
  std::vector<Poly> points;
  for (std::size_t j = 0; j < m; ++j)
    points.push_back(gf.monomial(j));
  RankCode code{field.p, m, n, {}, {}, d, true};
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const Poly coefficient = gf.monomial(l);
      Mat b(field.p, m, n);
      for (std::size_t j = 0; j < m; ++j) {
        const Poly value = gf.mul(coefficient, gf.frobenius(points[j], k));
        for (std::size_t c = 0; c < n; ++c)
          b.set(j, c, value[c]);
      }
      code.basis.push_back(std::move(b));
    }
  code.members = span_members(field.p, m, n, code.basis);
  return code;
}

RankCode lift_code(const RankCode &code, unsigned s) {
  if (!code.linear)
    throw UsageError("only linear codes can be lifted");
  const Ring base(code.h);
  if (base.component_count() != 1 || base.component(0).s != 1)
    throw UsageError("lift_code expects a code over a prime field");
  if (s == 0)
    throw UsageError("lift exponent must be positive");
  if (s == 1)
    return code;
  const std::uint64_t q = ipow(code.h, s);
  RankCode lifted{q, code.m, code.n, {}, {}, code.claimed_min_distance, true};
  for (const Mat &b : code.basis)
    lifted.basis.push_back(
        Mat::from_entries(q, b.rows(), b.cols(), {b.entries().begin(), b.entries().end()}));
  lifted.members = span_members(q, code.m, code.n, lifted.basis);
  const std::size_t d = verify_distance(Ring(q), lifted);
  if (d < lifted.claimed_min_distance)
    throw VerificationFailure("lifted code has minimum distance " + std::to_string(d) +
                              " below the claimed " +
                              std::to_string(lifted.claimed_min_distance));
  return lifted;
}

RankCode crt_combine(const Ring &ring, std::span<const RankCode> codes) {
  if (codes.size() != ring.component_count())
    throw UsageError("crt_combine needs one code per prime component");
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i].h != ring.component(i).q)
      throw UsageError("code " + std::to_string(i) + " is not over Z_" +
                       std::to_string(ring.component(i).q));
    if (codes[i].m != codes[0].m || codes[i].n != codes[0].n ||
        codes[i].claimed_min_distance != codes[0].claimed_min_distance)
      throw UsageError("component codes differ in shape or distance");
  }
  if (codes.size() == 1)
    return codes[0];
  const std::size_t m = codes[0].m, n = codes[0].n;
  RankCode out{ring.modulus(), m, n, {}, {}, codes[0].claimed_min_distance, true};
  for (const auto &c : codes)
    out.linear = out.linear && c.linear;

  std::vector<Mat> zeros;
  for (const auto &comp : ring.components())
    zeros.emplace_back(comp.q, m, n);
  if (out.linear)
    for (std::size_t i = 0; i < codes.size(); ++i)
      for (const Mat &b : codes[i].basis) {
        std::vector<Mat> parts = zeros;
        parts[i] = b;
        out.basis.push_back(crt_lift_mat(ring, parts));
      }

  std::uint64_t total = 1;
  for (const auto &c : codes)
    total *= c.members.size();
  std::vector<std::size_t> pick(codes.size(), 0);
  std::vector<Mat> parts(codes.size());
  for (std::uint64_t k = 0; k < total; ++k) {
    for (std::size_t i = 0; i < codes.size(); ++i)
      parts[i] = codes[i].members[pick[i]];
    out.members.push_back(crt_lift_mat(ring, parts));
    for (std::size_t i = 0; i < codes.size() && ++pick[i] == codes[i].members.size(); ++i)
      pick[i] = 0;
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::size_t pairwise_min_distance(const Ring &ring, std::span<const Mat> members,
                                  std::uint64_t budget) {
  const std::uint64_t pairs = members.size() * (members.size() - (members.empty() ? 0 : 1)) / 2;
  if (pairs > budget)
    throw BudgetExceeded("pairwise distance check over " + std::to_string(pairs) +
                         " pairs exceeds the budget");
  std::size_t best = kInfiniteDistance;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (members[a] != members[b])
        best = std::min(best, inner_rank(ring, members[a] - members[b]));
  return best;
}

std::size_t verify_distance(const Ring &ring, const RankCode &code, std::uint64_t budget) {
  if (code.members.size() < 2)
    return kInfiniteDistance;
  if (!code.linear)
    return pairwise_min_distance(ring, code.members, budget);
  if (code.members.size() - 1 > budget)
    throw BudgetExceeded("distance check exceeds the budget");
  std::size_t best = kInfiniteDistance;
  for (const Mat &a : code.members)
    if (!a.is_zero())
      best = std::min(best, inner_rank(ring, a));
  return best;
}

bool is_additively_closed(std::span<const Mat> sorted_members) {
  auto contains = [&](const Mat &x) {
    return std::binary_search(sorted_members.begin(), sorted_members.end(), x);
  };
  for (const Mat &a : sorted_members) {
    if (!contains(-a))
      return false;
    for (const Mat &b : sorted_members)
      if (!contains(a + b))
        return false;
  }
  return true;
}

RankCode independent_set_from_code(const Ring &ring, const GraphSpec &spec) {
  spec.validate();
  if (ring.modulus() != spec.h)
    throw UsageError("ring does not match graph modulus");
  if (spec.r == spec.m)
    return {spec.h, spec.m, spec.n, {Mat(spec.h, spec.m, spec.n)}, {}, kInfiniteDistance, true};
  std::vector<RankCode> parts;
  for (const auto &comp : ring.components()) {
    const RankCode field_code =
        gabidulin_code(least_irreducible_field(comp.p, spec.n), spec.m, spec.n, spec.r + 1);
    parts.push_back(lift_code(field_code, comp.s));
  }
  RankCode code = crt_combine(ring, parts);
  const auto expected = independence_number_formula(spec);
  if (!expected || code.members.size() != *expected)
    throw VerificationFailure("code has " + std::to_string(code.members.size()) +
                              " members, expected h^{n(m-r)}");
  const std::size_t d = verify_distance(ring, code, std::max<std::uint64_t>(kDefaultPairBudget,
                                                                           code.members.size()));
  if (d < spec.r + 1)
    throw VerificationFailure("combined code has minimum distance " + std::to_string(d));
  return code;
}

Coloring color_graph(const BilGraph &graph, const RankCode &code) {
  if (!code.linear)
    throw UsageError("coset colouring needs an additively closed code");
  const auto count = graph.vertex_count();
  const auto &conn = graph.connection_set();
  constexpr std::uint32_t kUncoloured = UINT32_MAX;
  Coloring out;
  out.color_of.assign(*count, kUncoloured);
  std::vector<VertexId> code_ids;
  for (const Mat &x : code.members)
    code_ids.push_back(graph.id(x));
  for (VertexId v = 0; v < *count; ++v) {
    if (out.color_of[v] != kUncoloured)
      continue;
    const auto c = static_cast<std::uint32_t>(out.colors++);
    for (VertexId x : code_ids) {
      const VertexId w = graph.add(v, x);
      if (out.color_of[w] != kUncoloured && out.color_of[w] != c)
        throw VerificationFailure("code is not a subgroup: cosets overlap");
      out.color_of[w] = c;
    }
  }
  for (VertexId u = 0; u < *count; ++u)
    for (VertexId c : conn) {
      const VertexId w = graph.add(u, c);
      if (u < w) {
        ++out.edges_checked;
        if (out.color_of[u] == out.color_of[w])
          ++out.monochromatic_edges;
      }
    }
  return out;
}

CliqueCover clique_cover_complement(const BilGraph &graph, const RankCode &code) {
  const GraphSpec &spec = graph.spec();
  const auto count = graph.vertex_count();
  if (!count || !graph.has_rank_table())
    throw BudgetExceeded("clique cover check needs the rank table");
  const auto base = build_canonical_clique(
      graph.ring(), {spec, std::vector<unsigned>(graph.ring().component_count(), 0)});
  std::vector<VertexId> base_ids;
  for (const Mat &x : base)
    base_ids.push_back(graph.id(x));

  CliqueCover cover;
  std::vector<std::uint8_t> hits(*count, 0);
  cover.disjoint = true;
  cover.parts_are_cliques = true;
  for (const Mat &s : code.members) {
    const VertexId sid = graph.id(s);
    std::vector<VertexId> part;
    for (VertexId b : base_ids) {
      const VertexId v = graph.add(sid, b);
      if (hits[v] != 0)
        cover.disjoint = false;
      hits[v] = 1;
      part.push_back(v);
    }
    for (std::size_t a = 0; a < part.size() && cover.parts_are_cliques; ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b)
        if (!graph.adjacent(part[a], part[b])) {
          cover.parts_are_cliques = false;
          break;
        }
    std::sort(part.begin(), part.end());
    cover.parts.push_back(std::move(part));
  }
  cover.covers = std::all_of(hits.begin(), hits.end(), [](std::uint8_t x) { return x > 0; });
  return cover;
}

} // namespace zhmat

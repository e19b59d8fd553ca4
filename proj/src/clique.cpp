#include "zhmat/clique.hpp"

#include <algorithm>

#include "zhmat/error.hpp"
#include "zhmat/smith.hpp"

namespace zhmat {

void CanonicalCliqueSpec::validate(const Ring &ring) const {
  spec.validate();
  if (ring.modulus() != spec.h)
    throw UsageError("ring does not match graph modulus");
  if (alpha.size() != ring.component_count())
    throw UsageError("alpha needs one exponent per prime component");
  bool all_zero = true;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0 && alpha[i] != ring.component(i).s)
      throw UsageError("each alpha_i must be 0 or s_i");
    all_zero = all_zero && alpha[i] == 0;
  }
  if (!all_zero && spec.m != spec.n)
    throw UsageError("nonzero alpha needs m = n, otherwise the family is not maximum");
}

std::vector<Mat> build_canonical_clique(const Ring &ring, const CanonicalCliqueSpec &cspec) {
  cspec.validate(ring);
  const auto &[h, m, n, r] = cspec.spec;
  std::vector<unsigned> complement;
  for (std::size_t i = 0; i < cspec.alpha.size(); ++i)
    complement.push_back(ring.component(i).s - cspec.alpha[i]);
  std::vector<Residue> full(h);
  for (Residue x = 0; x < h; ++x)
    full[x] = x;
  const auto upper = ring.ideal_elements(IdealLabel{cspec.alpha});
  const auto lower = ring.ideal_elements(IdealLabel{complement});

  // Allowed values for each entry, row-major.
  std::vector<const std::vector<Residue> *> choices;
  static const std::vector<Residue> zero{0};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < r)
        choices.push_back(j < r ? &full : &upper);
      else
        choices.push_back(j < r ? &lower : &zero);
    }
  std::vector<Mat> out;
  std::vector<std::size_t> digit(choices.size(), 0);
  for (;;) {
    std::vector<Residue> e(choices.size());
    for (std::size_t k = 0; k < e.size(); ++k)
      e[k] = (*choices[k])[digit[k]];
    out.push_back(Mat::from_entries(h, m, n, std::move(e)));
    std::size_t k = choices.size();
    while (k > 0 && ++digit[k - 1] == choices[k - 1]->size())
      digit[--k] = 0;
    if (k == 0)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(CliqueKind kind) {
  switch (kind) {
  case CliqueKind::Row:
    return "RowForm";
  case CliqueKind::Col:
    return "ColForm";
  case CliqueKind::Mixed:
    return "MixedForm";
  }
  return "?";
}

std::optional<CliqueKind> clique_kind_from_string(const std::string &name) {
  if (name == "RowForm" || name == "row")
    return CliqueKind::Row;
  if (name == "ColForm" || name == "col")
    return CliqueKind::Col;
  if (name == "MixedForm" || name == "mixed")
    return CliqueKind::Mixed;
  return std::nullopt;
}

std::vector<unsigned> form_alpha(const Ring &ring, const CliqueForm &form) {
  switch (form.kind) {
  case CliqueKind::Row:
    return std::vector<unsigned>(ring.component_count(), 0);
  case CliqueKind::Col:
    return ring.saturated_exponents();
  case CliqueKind::Mixed:
    if (!form.alpha)
      throw UsageError("MixedForm needs alpha");
    return *form.alpha;
  }
  return {};
}

std::vector<Mat> rebuild_clique(const Ring &ring, const GraphSpec &spec, const CliqueForm &form) {
  const Mat S = form.S.value_or(Mat::identity(spec.h, spec.m));
  const Mat T = form.T.value_or(Mat::identity(spec.h, spec.n));
  std::vector<Mat> out;
  for (const Mat &x : build_canonical_clique(ring, {spec, form_alpha(ring, form)}))
    out.push_back(S * x * T + form.B0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mat> normalize_family(const GraphSpec &spec, std::span<const Mat> family) {
  std::vector<Mat> out(family.begin(), family.end());
  for (const Mat &a : out)
    if (a.modulus() != spec.h || a.rows() != spec.m || a.cols() != spec.n)
      throw UsageError("family member does not match the graph dimensions");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>>
find_non_adjacent_pair(const BilGraph &graph, std::span<const Mat> family) {
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      if (family[a] != family[b] && !graph.adjacent(family[a], family[b]))
        return std::pair{a, b};
  return std::nullopt;
}

bool is_clique(const BilGraph &graph, std::span<const Mat> family) {
  return !find_non_adjacent_pair(graph, family).has_value();
}

namespace {

enum class LocalType { Row, Col, Neither };

// Exponent pattern of a free rank-r summand: r zeros followed by s's.
bool is_free_summand(const std::vector<unsigned> &exps, std::size_t r, unsigned s) {
  for (std::size_t c = 0; c < exps.size(); ++c)
    if (exps[c] != (c < r ? 0u : s))
      return false;
  return true;
}

struct LocalShape {
  LocalType type = LocalType::Neither;
  Mat transform; // S_i for Row, T_i for Col
};

LocalShape detect_local_shape(const std::vector<Mat> &members, const PrimePower &comp,
                              const GraphSpec &spec) {
  const std::size_t expected = *matrix_space_size(comp.q, spec.r, spec.n);
  if (members.size() != expected)
    return {};
  const LocalSmithForm rows = snf_prime_power(hconcat(members), comp.p, comp.s);
  if (is_free_summand(rows.exponents, spec.r, comp.s))
    return {LocalType::Row, rows.S};
  if (spec.m != spec.n)
    return {};
  std::vector<Mat> transposed;
  for (const Mat &x : members)
    transposed.push_back(x.transpose());
  const LocalSmithForm cols = snf_prime_power(hconcat(transposed), comp.p, comp.s);
  if (is_free_summand(cols.exponents, spec.r, comp.s))
    return {LocalType::Col, cols.S.transpose()};
  return {};
}

} // namespace

CliqueForm classify_max_clique(const BilGraph &graph, std::span<const Mat> family) {
  const GraphSpec &spec = graph.spec();
  const Ring &ring = graph.ring();
  const std::vector<Mat> members = normalize_family(spec, family);
  const auto bound = clique_number_formula(spec);
  if (!bound || members.size() != *bound)
    throw UsageError("family has " + std::to_string(members.size()) +
                     " members, a maximum clique has h^{nr}");
  if (!is_clique(graph, members))
    throw UsageError("family is not a clique");

  CliqueForm form{CliqueKind::Row, std::nullopt, std::nullopt, std::nullopt, members.front()};
  const std::size_t t = ring.component_count();
  std::vector<LocalShape> shapes;
  for (std::size_t i = 0; i < t; ++i) {
    const auto &comp = ring.component(i);
    std::vector<Mat> projected;
    for (const Mat &x : members)
      projected.push_back((x - form.B0).reduced(comp.q));
    std::sort(projected.begin(), projected.end());
    projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
    shapes.push_back(detect_local_shape(projected, comp, spec));
    if (shapes.back().type == LocalType::Neither)
      throw VerificationFailure("projection onto Z_" + std::to_string(comp.q) +
                                " is neither row nor column type");
  }

  const bool all_row = std::all_of(shapes.begin(), shapes.end(),
                                   [](const LocalShape &s) { return s.type == LocalType::Row; });
  const bool all_col = std::all_of(shapes.begin(), shapes.end(),
                                   [](const LocalShape &s) { return s.type == LocalType::Col; });
  std::vector<Mat> s_parts, t_parts;
  std::vector<unsigned> alpha;
  for (std::size_t i = 0; i < t; ++i) {
    const auto &comp = ring.component(i);
    const bool row = shapes[i].type == LocalType::Row;
    s_parts.push_back(row ? shapes[i].transform : Mat::identity(comp.q, spec.m));
    t_parts.push_back(row ? Mat::identity(comp.q, spec.n) : shapes[i].transform);
    alpha.push_back(row ? 0 : comp.s);
  }
  if (all_row) {
    form.kind = CliqueKind::Row;
    form.S = crt_lift_mat(ring, s_parts);
  } else if (all_col) {
    form.kind = CliqueKind::Col;
    form.T = crt_lift_mat(ring, t_parts);
  } else {
    form.kind = CliqueKind::Mixed;
    form.S = crt_lift_mat(ring, s_parts);
    form.T = crt_lift_mat(ring, t_parts);
    form.alpha = alpha;
  }
  if (rebuild_clique(ring, spec, form) != members)
    throw VerificationFailure("recovered " + to_string(form.kind) +
                              " does not reproduce the clique");
  return form;
}

EkrReport verify_ekr(const BilGraph &graph, std::span<const Mat> family) {
  const std::vector<Mat> members = normalize_family(graph.spec(), family);
  if (!is_clique(graph, members))
    throw UsageError("family is not r-intersecting");
  const auto bound = clique_number_formula(graph.spec());
  if (!bound)
    throw BudgetExceeded("h^{nr} overflows 64 bits");
  EkrReport report{members.size(), *bound, members.size() <= *bound, members.size() == *bound,
                   std::nullopt};
  if (report.extremal)
    report.form = classify_max_clique(graph, members);
  return report;
}

std::vector<std::vector<Mat>> enumerate_max_cliques(const BilGraph &graph, std::uint64_t budget) {
  const auto count = graph.vertex_count();
  if (!count || *count > budget)
    throw BudgetExceeded("clique enumeration needs h^{mn} <= " + std::to_string(budget));
  const BuiltGraph built = build_graph(graph, budget);
  const auto target = *clique_number_formula(graph.spec());
  std::vector<std::vector<Mat>> out;
  for (const auto &ids : cliques_of_size(built.bits(), target)) {
    std::vector<Mat> family;
    for (std::size_t v : ids)
      family.push_back(graph.vertex(v));
    out.push_back(std::move(family));
  }
  return out;
}

CliqueForm random_clique_form(const Ring &ring, const GraphSpec &spec, CliqueKind kind,
                              const std::vector<unsigned> &alpha, Rng &rng) {
  spec.validate();
  if (kind != CliqueKind::Row && spec.m != spec.n)
    throw UsageError(to_string(kind) + " needs m = n");
  CliqueForm form{kind, std::nullopt, std::nullopt, std::nullopt, Mat{}};
  if (kind != CliqueKind::Col)
    form.S = random_invertible(ring, spec.m, rng);
  if (kind != CliqueKind::Row)
    form.T = random_invertible(ring, spec.n, rng);
  if (kind == CliqueKind::Mixed) {
    CanonicalCliqueSpec{spec, alpha}.validate(ring);
    form.alpha = alpha;
  }
  form.B0 = random_matrix(spec.h, spec.m, spec.n, rng);
  return form;
}

} // namespace zhmat

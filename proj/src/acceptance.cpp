#include "zhmat/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include "zhmat/bilgraph.hpp"
#include "zhmat/clique.hpp"
#include "zhmat/error.hpp"
#include "zhmat/oracle.hpp"
#include "zhmat/orbits.hpp"
#include "zhmat/rankcode.hpp"
#include "zhmat/smith.hpp"

namespace zhmat {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool cond, const std::string &what) {
    if (!cond && passed) {
      passed = false;
      detail.str("");
      detail << "FAILED: " << what;
    }
  }
  template <class T> Outcome &note(const T &x) {
    if (passed)
      detail << x;
    return *this;
  }
};

std::vector<Mat> all_matrices(std::uint64_t h, std::size_t m, std::size_t n) {
  const std::uint64_t count = *matrix_space_size(h, m, n);
  std::vector<Mat> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k)
    out.push_back(matrix_at(h, m, n, k));
  return out;
}

bool snf_sound(const Ring &ring, const Mat &a) {
  const SmithForm f = snf(ring, a);
  return f.S * f.D * f.T == a && is_invertible(ring, f.S) && is_invertible(ring, f.T) &&
         is_well_formed(ring, f.omega) && f.omega == oracle::omega_via_minors(ring, a);
}

void criterion_snf(Outcome &out, const AcceptanceOptions &opt) {
  struct Case {
    std::uint64_t h;
    std::size_t m, n;
  };
  for (const Case c : {Case{4, 2, 2}, Case{6, 2, 2}, Case{6, 2, 3}}) {
    const Ring ring(c.h);
    std::size_t checked = 0;
    for (const Mat &a : all_matrices(c.h, c.m, c.n)) {
      out.require(snf_sound(ring, a), "SNF check on Z_" + std::to_string(c.h));
      ++checked;
    }
    out.note("Z_").note(c.h).note(' ').note(c.m).note('x').note(c.n).note(": ").note(checked).note("; ");
  }
  const Ring ring(12);
  Rng rng(opt.seed);
  for (int k = 0; k < 10'000; ++k)
    out.require(snf_sound(ring, random_matrix(12, 3, 3, rng)), "SNF check on Z_12 3x3 sample");
  out.note("Z_12 3x3: 10000 samples");
}

void criterion_orbit_count(Outcome &out, const AcceptanceOptions &opt) {
  struct Case {
    std::uint64_t h;
    std::size_t m, n;
    std::uint64_t expected;
  };
  for (const Case c : {Case{4, 2, 2, 6}, Case{6, 2, 2, 9}, Case{6, 2, 3, 9}, Case{12, 2, 2, 18}}) {
    const Ring ring(c.h);
    const CensusReport rep = census_by_enumeration(ring, c.m, c.n, kDefaultCensusBudget, opt.threads);
    const std::uint64_t formula = expected_label_count(ring, c.m, c.n);
    out.require(rep.entries.size() == c.expected && formula == c.expected &&
                    rep.total == *matrix_space_size(c.h, c.m, c.n),
                "orbit count on Z_" + std::to_string(c.h));
    out.note("Z_").note(c.h).note(' ').note(c.m).note('x').note(c.n).note(" -> ")
        .note(rep.entries.size()).note("; ");
  }
}

void criterion_orbit_product(Outcome &out, const AcceptanceOptions &opt) {
  for (std::uint64_t h : {6, 12}) {
    const OrbitProductCheck chk =
        verify_orbit_product(Ring(h), 2, 2, kDefaultCensusBudget, opt.threads);
    out.require(chk.holds, "orbit length product on Z_" + std::to_string(h));
    out.note("Z_").note(h).note(": ").note(chk.rows.size()).note(" labels; ");
  }
}

void criterion_projections(Outcome &out, const AcceptanceOptions &) {
  for (std::uint64_t h : {6, 12}) {
    const Ring ring(h);
    for (const Mat &a : all_matrices(h, 2, 2)) {
      const std::size_t rho = inner_rank(ring, a);
      const ProjectedRanks pr = rank_via_projections(ring, a);
      out.require(pr.via_pi == rho && pr.via_theta == rho,
                  "projection ranks on Z_" + std::to_string(h));
      if (h == 6)
        out.require(oracle::inner_rank_by_factorization(ring, a) == rho,
                    "factorization search rank on Z_6");
    }
    out.note("Z_").note(h).note(" 2x2: all agree; ");
  }
}

void criterion_graph_numbers(Outcome &out, const AcceptanceOptions &opt) {
  for (std::uint64_t h : {2, 3}) {
    const BilGraph g({h, 2, 2, 1}, kDefaultRankTableBudget, opt.threads);
    const std::uint64_t w = exact_clique_number(g), a = exact_independence_number(g);
    const BuiltGraph built = build_graph(g);
    oracle::AdjacencyMatrix adj(built.vertex_count(), std::vector<bool>(built.vertex_count()));
    for (std::size_t u = 0; u < adj.size(); ++u)
      for (std::size_t v = 0; v < adj.size(); ++v)
        adj[u][v] = built.adjacent(u, v);
    const std::size_t ow = oracle::exact_clique(adj).size(), oa = oracle::exact_mis(adj).size();
    out.require(w == h * h && a == h * h && ow == w && oa == a,
                "exact omega/alpha on Z_" + std::to_string(h));
    out.note("Z_").note(h).note(": omega=").note(w).note(" alpha=").note(a).note("; ");
  }
  for (std::uint64_t h : {6, 12}) {
    const GraphSpec spec{h, 2, 2, 1};
    const Ring ring(h);
    const BilGraph g(spec, kDefaultRankTableBudget, opt.threads);
    const auto clique = build_canonical_clique(ring, {spec, std::vector<unsigned>(ring.component_count(), 0)});
    const RankCode code = independent_set_from_code(ring, spec);
    const Coloring col = color_graph(g, code);
    const std::uint64_t V = *g.vertex_count(), target = h * h;
    const bool code_ok = pairwise_min_distance(ring, code.members, V) >= 2;
    const SandwichReport sw = sandwich_inequality(V, code.members.size(), clique.size());
    out.require(clique.size() == target && is_clique(g, clique) && code.members.size() == target &&
                    code_ok && col.proper() && col.colors == target && sw.holds && sw.tight,
                "certificates on Z_" + std::to_string(h));
    out.note("Z_").note(h).note(": clique ").note(clique.size()).note(", code ")
        .note(code.members.size()).note(", colours ").note(col.colors).note("; ");
  }
}

void criterion_codes(Outcome &out, const AcceptanceOptions &) {
  struct Case {
    std::uint64_t h;
    std::size_t m, n;
  };
  for (const Case c : {Case{2, 2, 2}, Case{3, 2, 2}, Case{4, 2, 2}, Case{6, 2, 2}, Case{12, 2, 2},
                       Case{4, 2, 3}}) {
    const GraphSpec spec{c.h, c.m, c.n, 1};
    const Ring ring(c.h);
    const RankCode code = independent_set_from_code(ring, spec);
    const std::size_t d = pairwise_min_distance(ring, code.members, 1'000'000);
    out.require(code.members.size() == *independence_number_formula(spec) && d == 2,
                "MRD code over Z_" + std::to_string(c.h));
    out.note("Z_").note(c.h).note(' ').note(c.m).note('x').note(c.n).note(": ")
        .note(code.members.size()).note(" d=").note(d).note("; ");
  }
}

void criterion_coloring(Outcome &out, const AcceptanceOptions &opt) {
  const GraphSpec spec{6, 2, 2, 1};
  const Ring ring(6);
  const BilGraph g(spec, kDefaultRankTableBudget, opt.threads);
  const RankCode code = independent_set_from_code(ring, spec);
  const Coloring col = color_graph(g, code);
  const CliqueCover cover = clique_cover_complement(g, code);
  bool sizes = cover.parts.size() == 36;
  for (const auto &part : cover.parts)
    sizes = sizes && part.size() == 36;
  out.require(col.proper() && col.colors == 36 && cover.ok() && sizes, "colouring or cover");
  out.note("colours ").note(col.colors).note(" over ").note(col.edges_checked)
      .note(" edges; cover ").note(cover.parts.size()).note(" parts");
}

// Classifies a family and checks that the rebuilt form reproduces it.
bool classify_round_trip(const BilGraph &g, const std::vector<Mat> &family,
                         std::optional<CliqueKind> expected) {
  const CliqueForm form = classify_max_clique(g, family);
  if (expected && form.kind != *expected)
    return false;
  return rebuild_clique(g.ring(), g.spec(), form) == normalize_family(g.spec(), family);
}

struct GeneratedCase {
  std::uint64_t h;
  std::size_t n;
  CliqueKind kind;
  std::vector<unsigned> alpha;
};

std::vector<GeneratedCase> generated_cases() {
  return {{6, 2, CliqueKind::Row, {}},      {6, 2, CliqueKind::Col, {}},
          {6, 2, CliqueKind::Mixed, {0, 1}}, {6, 2, CliqueKind::Mixed, {1, 0}},
          {12, 2, CliqueKind::Row, {}},     {12, 2, CliqueKind::Col, {}},
          {12, 2, CliqueKind::Mixed, {0, 1}}, {12, 2, CliqueKind::Mixed, {2, 0}},
          {6, 3, CliqueKind::Row, {}}};
}

void for_each_generated(const AcceptanceOptions &opt,
                        const std::function<void(const BilGraph &, const GeneratedCase &,
                                                 const std::vector<Mat> &)> &visit) {
  Rng rng(opt.seed);
  for (const auto &c : generated_cases()) {
    const BilGraph g({c.h, 2, c.n, 1}, kDefaultRankTableBudget, opt.threads);
    for (int k = 0; k < 100; ++k) {
      const CliqueForm form = random_clique_form(g.ring(), g.spec(), c.kind, c.alpha, rng);
      visit(g, c, rebuild_clique(g.ring(), g.spec(), form));
    }
  }
}

void criterion_classification(Outcome &out, const AcceptanceOptions &opt) {
  for (std::uint64_t h : {2, 3}) {
    const BilGraph g({h, 2, 2, 1});
    const auto cliques = enumerate_max_cliques(g);
    std::size_t rows = 0, cols = 0;
    for (const auto &family : cliques) {
      const CliqueForm form = classify_max_clique(g, family);
      rows += form.kind == CliqueKind::Row;
      cols += form.kind == CliqueKind::Col;
      out.require(form.kind != CliqueKind::Mixed &&
                      rebuild_clique(g.ring(), g.spec(), form) == normalize_family(g.spec(), family),
                  "enumerated clique over Z_" + std::to_string(h));
    }
    out.note("Z_").note(h).note(": ").note(cliques.size()).note(" cliques (").note(rows)
        .note(" row, ").note(cols).note(" col); ");
  }
  std::size_t generated = 0;
  for_each_generated(opt, [&](const BilGraph &g, const GeneratedCase &c,
                              const std::vector<Mat> &family) {
    out.require(classify_round_trip(g, family, c.kind),
                "round trip of generated " + to_string(c.kind) + " clique over Z_" +
                    std::to_string(c.h));
    ++generated;
  });
  out.note(generated).note(" generated cliques round-tripped");
}

bool ekr_rejects(const BilGraph &g, std::vector<Mat> family) {
  try {
    return !verify_ekr(g, family).within_bound;
  } catch (const UsageError &) {
    return true; // not r-intersecting
  }
}

void criterion_ekr(Outcome &out, const AcceptanceOptions &opt) {
  std::size_t accepted = 0, rejected = 0;
  for (std::uint64_t h : {2, 3}) {
    const BilGraph g({h, 2, 2, 1});
    const auto cliques = enumerate_max_cliques(g);
    for (const auto &family : cliques) {
      const EkrReport rep = verify_ekr(g, family);
      out.require(rep.extremal && rep.form.has_value(), "EKR on enumerated clique");
      ++accepted;
    }
    if (h == 2) {
      for (const auto &family : cliques) {
        const std::set<Mat> members(family.begin(), family.end());
        for (const Mat &x : all_matrices(2, 2, 2)) {
          if (members.contains(x))
            continue;
          auto bigger = family;
          bigger.push_back(x);
          out.require(ekr_rejects(g, bigger), "EKR accepted an enlarged Z_2 clique");
          ++rejected;
        }
      }
    }
  }
  for_each_generated(opt, [&](const BilGraph &g, const GeneratedCase &, const std::vector<Mat> &family) {
    const EkrReport rep = verify_ekr(g, family);
    out.require(rep.extremal && rep.form.has_value(), "EKR on generated clique");
    ++accepted;
  });
  const BilGraph g6({6, 2, 2, 1});
  Rng rng(opt.seed + 1);
  const Ring ring(6);
  for (int k = 0; k < 1000; ++k) {
    const auto kind = k % 2 ? CliqueKind::Col : CliqueKind::Row;
    auto family = rebuild_clique(ring, g6.spec(), random_clique_form(ring, g6.spec(), kind, {}, rng));
    const std::set<Mat> members(family.begin(), family.end());
    Mat x;
    do
      x = random_matrix(6, 2, 2, rng);
    while (members.contains(x));
    family.push_back(x);
    out.require(ekr_rejects(g6, family), "EKR accepted an enlarged Z_6 clique");
    ++rejected;
  }
  out.note(accepted).note(" extremal families accepted, ").note(rejected)
      .note(" enlarged families rejected");
}

void criterion_transitivity(Outcome &out, const AcceptanceOptions &opt) {
  for (std::uint64_t h : {2, 3, 6}) {
    const BilGraph g({h, 2, 2, 1}, kDefaultRankTableBudget, opt.threads);
    const bool connected = check_connectivity(g);
    const TransitivityReport rep = check_vertex_transitivity(g, 1000, opt.seed + h);
    out.require(connected && rep.ok() && rep.samples == 1000,
                "connectivity or transitivity on Z_" + std::to_string(h));
    out.note("Z_").note(h).note(": connected, ").note(rep.samples).note(" samples; ");
  }
}

struct Entry {
  const char *name;
  void (*run)(Outcome &, const AcceptanceOptions &);
};

constexpr Entry kCriteria[kCriterionCount] = {
    {"snf soundness", criterion_snf},
    {"orbit counts", criterion_orbit_count},
    {"orbit length product", criterion_orbit_product},
    {"rank via projections", criterion_projections},
    {"graph numbers", criterion_graph_numbers},
    {"mrd codes", criterion_codes},
    {"colouring and complement cover", criterion_coloring},
    {"clique classification", criterion_classification},
    {"intersecting family bound", criterion_ekr},
    {"transitivity and connectivity", criterion_transitivity},
};

} // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions &options) {
  if (id < 1 || id > kCriterionCount)
    throw UsageError("criterion id must be in 1.." + std::to_string(kCriterionCount));
  const Entry &entry = kCriteria[id - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    entry.run(out, options);
  } catch (const std::exception &e) {
    out.passed = false;
    out.detail.str("");
    out.detail << "FAILED: exception: " << e.what();
  }
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  std::string detail = out.detail.str();
  while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';'))
    detail.pop_back();
  return {id, entry.name, out.passed, detail, took.count()};
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result(const CriterionResult &r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed
     << std::setprecision(2) << r.seconds << " s): " << r.detail;
  return os.str();
}

} // namespace zhmat

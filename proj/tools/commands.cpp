#include "commands.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zhmat/acceptance.hpp"
#include "zhmat/bilgraph.hpp"
#include "zhmat/clique.hpp"
#include "zhmat/error.hpp"
#include "zhmat/io.hpp"
#include "zhmat/oracle.hpp"
#include "zhmat/orbits.hpp"
#include "zhmat/rankcode.hpp"
#include "zhmat/smith.hpp"

namespace zhmat::cli {

namespace {

using io::Json;

constexpr const char *kFormatsHelp =
    "File formats: a matrix is JSON {\"h\",\"rows\",\"cols\",\"entries\":[[...],...]}; a "
    "family is JSON {\"h\",\"rows\",\"cols\",\"matrices\":[entries,...]} or a list of "
    "matrix objects, or CSV with one matrix per line in row-major order.";

struct Globals {
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;

  std::uint64_t budget_or(std::uint64_t fallback) const { return budget.value_or(fallback); }

  std::uint64_t seed_or_notice() const {
    if (!seed)
      std::cerr << "notice: no --seed given, using seed 0\n";
    return seed.value_or(0);
  }
};

unsigned default_threads() {
  if (const char *env = std::getenv("ZHMAT_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v >= 1)
        return static_cast<unsigned>(v);
    } catch (const std::exception &) {
    }
    std::cerr << "notice: ignoring invalid ZHMAT_THREADS=" << env << '\n';
  }
  return 1;
}

void emit(const Json &j) { std::cout << io::to_text(j); }

struct ShapeArgs {
  std::uint64_t h = 0;
  std::size_t m = 0, n = 0, r = 0;

  void add(CLI::App *cmd, bool with_r) {
    cmd->add_option("--h", h, "Modulus h >= 2")->required();
    cmd->add_option("--m", m, "Rows")->required();
    cmd->add_option("--n", n, "Columns")->required();
    if (with_r)
      cmd->add_option("--r", r, "Rank threshold of the bilinear forms graph, 1 <= r <= m")
          ->required();
  }
  GraphSpec spec() const {
    GraphSpec s{h, m, n, r};
    s.validate();
    return s;
  }
};

Ring make_ring(std::uint64_t h) {
  if (h < 2)
    throw UsageError("h must be at least 2");
  return Ring(h);
}

Json snf_json(const Ring &ring, const Mat &a) {
  const SmithForm f = snf(ring, a);
  Json j;
  j["S"] = io::matrix_to_json(f.S);
  j["D"] = io::matrix_to_json(f.D);
  j["T"] = io::matrix_to_json(f.T);
  j["omega"] = io::omega_to_json(f.omega);
  j["inner_rank"] = inner_rank(ring, f.omega);
  return j;
}

void emit_omega_csv(const Ring &ring, const InvariantFactors &omega) {
  std::cout << "p,s,exponents\n";
  for (std::size_t i = 0; i < omega.rows.size(); ++i) {
    std::cout << ring.component(i).p << ',' << ring.component(i).s << ",\"";
    for (std::size_t c = 0; c < omega.rows[i].size(); ++c)
      std::cout << (c ? " " : "") << omega.rows[i][c];
    std::cout << "\"\n";
  }
}

void emit_family(const Globals &g, const std::string &out, std::uint64_t h, std::size_t m,
                 std::size_t n, const std::vector<Mat> &family, const Json &meta) {
  const std::string text = g.format == "csv" ? io::family_to_csv(family)
                                             : io::to_text(io::family_to_json(h, m, n, family, meta));
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_file(out, text);
    Json j = meta;
    j["size"] = family.size();
    j["written"] = out;
    emit(j);
  }
}

std::string label_text(const OrbitLabel &label) { return io::omega_to_json(label).dump(); }

} // namespace

int run(int argc, char **argv) {
  CLI::App app{"Matrices over residue class rings Z_h: Smith forms, inner rank, orbit census, "
               "bilinear forms graphs, maximum cliques and rank distance codes."};
  app.set_help_flag("--help", "Show help");
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(kFormatsHelp);

  Globals g;
  g.threads = default_threads();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--budget", g.budget,
                 "Cap on enumeration sizes; each subcommand documents its default");
  app.add_option("--threads", g.threads, "Worker threads (default: $ZHMAT_THREADS or 1)")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Seed for randomized steps (default 0, with a notice)");

  auto *snf_cmd = app.add_subcommand("snf", "Smith normal form S, D, T with A = S D T and the "
                                            "invariant-factor array omega (one row per prime).");
  std::uint64_t snf_h = 0;
  std::string matrix_file;
  snf_cmd->add_option("--h", snf_h, "Modulus h >= 2")->required();
  snf_cmd->add_option("--matrix", matrix_file, "Matrix JSON file")->required();

  auto *rank_cmd = app.add_subcommand("rank", "Inner rank from omega, cross-checked against the "
                                              "ranks of the component projections.");
  std::uint64_t rank_h = 0;
  rank_cmd->add_option("--h", rank_h, "Modulus h >= 2")->required();
  rank_cmd->add_option("--matrix", matrix_file, "Matrix JSON file")->required();

  auto *orbits_cmd = app.add_subcommand(
      "orbits", "Census of equivalence orbits by exhaustive enumeration. CSV rows "
                "omega_label,length (JSON summary on stderr) or one JSON document. "
                "Budget: h^{mn} matrices, default 10^7.");
  ShapeArgs orb;
  orb.add(orbits_cmd, false);
  bool verify_product = false;
  orbits_cmd->add_flag("--verify-product", verify_product,
                       "Also check that each orbit length is the product of the component "
                       "orbit lengths (exit 1 if not)");

  auto *stats_cmd = app.add_subcommand(
      "graph-stats",
      "Vertex count, degree, clique and independence numbers of Bil_r(Z_h^{m x n}) with "
      "certificates for the chromatic number. Budgets: exact search 256 vertices, "
      "certificates and traversal 10^6 vertices.");
  ShapeArgs gs;
  gs.add(stats_cmd, true);
  bool exact = false, connectivity = false;
  std::size_t transitivity_samples = 0;
  stats_cmd->add_flag("--exact", exact, "Exact branch-and-bound clique/independence numbers");
  stats_cmd->add_flag("--connectivity", connectivity, "Breadth-first connectivity check");
  stats_cmd->add_option("--transitivity-samples", transitivity_samples,
                        "Sampled automorphism adjacency checks (uses --seed)");

  auto *build_clique_cmd = app.add_subcommand(
      "build-clique", "Canonical maximum clique S * C_r(alpha) * T + B0 as a family file.");
  ShapeArgs bc;
  bc.add(build_clique_cmd, true);
  std::vector<unsigned> alpha;
  std::string s_file, t_file, b0_file, out_file;
  build_clique_cmd->add_option("--alpha", alpha, "Exponents a1,...,at, each 0 or s_i")
      ->required()
      ->delimiter(',');
  build_clique_cmd->add_option("--S", s_file, "Invertible m x m matrix JSON (default identity)");
  build_clique_cmd->add_option("--T", t_file, "Invertible n x n matrix JSON (default identity)");
  build_clique_cmd->add_option("--B0", b0_file, "Translation matrix JSON (default zero)");
  build_clique_cmd->add_option("--out", out_file, "Write the family here instead of stdout");

  auto *classify_cmd = app.add_subcommand(
      "classify-clique", "Classify a maximum clique as Row, Col or Mixed form and verify it "
                         "by rebuilding. Exit 1 if no form reproduces the family.");
  ShapeArgs cc;
  cc.add(classify_cmd, true);
  std::string family_file;
  classify_cmd->add_option("--family", family_file, "Family file (JSON or CSV)")->required();

  auto *ekr_cmd = app.add_subcommand(
      "verify-ekr", "Check an r-intersecting family against the bound h^{nr}; extremal "
                    "families are classified.");
  ShapeArgs ek;
  ek.add(ekr_cmd, true);
  ekr_cmd->add_option("--family", family_file, "Family file (JSON or CSV)")->required();

  auto *mrd_cmd = app.add_subcommand(
      "build-mrd", "Maximum rank distance code of size h^{n(m-r)} and minimum distance r+1, "
                   "with its distance verified over all pairs. Budget: pairs, default "
                   "max(10^5, size).");
  ShapeArgs mr;
  mr.add(mrd_cmd, true);
  mrd_cmd->add_option("--out", out_file, "Write the code here instead of stdout");

  auto *verify_code_cmd = app.add_subcommand(
      "verify-code", "Minimum pairwise inner-rank distance of a family; exit 1 if below --d. "
                     "Budget: pairs, default 10^5.");
  std::optional<std::uint64_t> vc_h;
  std::optional<std::size_t> vc_m, vc_n;
  std::size_t required_d = 0;
  verify_code_cmd->add_option("--family", family_file, "Family file (JSON or CSV)")->required();
  verify_code_cmd->add_option("--d", required_d, "Required minimum distance")->required();
  verify_code_cmd->add_option("--h", vc_h, "Modulus (required for CSV)");
  verify_code_cmd->add_option("--m", vc_m, "Rows (required for CSV)");
  verify_code_cmd->add_option("--n", vc_n, "Columns (required for CSV)");

  auto *color_cmd = app.add_subcommand(
      "color", "Coset colouring of Bil_r by a linear MRD code, checked over every edge; with "
               "--complement, the translate clique cover read as a colouring of the "
               "complement. Budget: vertices, default 2^22.");
  ShapeArgs co;
  co.add(color_cmd, true);
  bool complement = false;
  color_cmd->add_flag("--complement", complement, "Colour the complement graph instead");
  color_cmd->add_option("--out", out_file, "Write the colour of each vertex id here");

  auto *cover_cmd = app.add_subcommand(
      "cover-complement", "Partition of the vertices into maximum cliques code + C_r(0). "
                          "Budget: vertices, default 2^22.");
  ShapeArgs cv;
  cv.add(cover_cmd, true);
  cover_cmd->add_option("--out", out_file, "Write the parts (lists of vertex ids) here");

  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations.");
  oracle_cmd->require_subcommand(1);
  auto *oracle_omega = oracle_cmd->add_subcommand(
      "omega", "Invariant factors from determinantal divisors; min(m, n) <= 4.");
  std::uint64_t oracle_h = 0;
  oracle_omega->add_option("--h", oracle_h, "Modulus h >= 2")->required();
  oracle_omega->add_option("--matrix", matrix_file, "Matrix JSON file")->required();
  auto *oracle_rank = oracle_cmd->add_subcommand(
      "rank", "Inner rank by exhaustive factorization search. Budget: h^{(m+n)r}, default 5*10^6.");
  oracle_rank->add_option("--h", oracle_h, "Modulus h >= 2")->required();
  oracle_rank->add_option("--matrix", matrix_file, "Matrix JSON file")->required();
  auto *oracle_graph = oracle_cmd->add_subcommand(
      "graph", "Clique and independence numbers by plain branch and bound; at most 256 vertices.");
  ShapeArgs og;
  og.add(oracle_graph, true);

  auto *selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite.");
  std::string level = "desk";
  std::vector<int> only;
  selftest_cmd->add_option("--level", level, "Suite size")->check(CLI::IsMember({"desk"}));
  selftest_cmd->add_option("--criterion", only, "Run only these criteria (1-10)")
      ->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (snf_cmd->parsed()) {
      const Ring ring = make_ring(snf_h);
      const Mat a = io::load_matrix(matrix_file, snf_h);
      if (g.format == "csv")
        emit_omega_csv(ring, snf(ring, a).omega);
      else
        emit(snf_json(ring, a));
    } else if (rank_cmd->parsed()) {
      const Ring ring = make_ring(rank_h);
      const Mat a = io::load_matrix(matrix_file, rank_h);
      const InvariantFactors omega = invariant_factors(ring, a);
      const ProjectedRanks pr = rank_via_projections(ring, a);
      const std::size_t rho = inner_rank(ring, omega);
      Json j;
      j["inner_rank"] = rho;
      j["rank_via_pi"] = pr.via_pi;
      j["rank_via_theta"] = pr.via_theta;
      j["omega"] = io::omega_to_json(omega);
      emit(j);
      if (pr.via_pi != rho || pr.via_theta != rho)
        throw VerificationFailure("projection ranks disagree with the inner rank");
    } else if (orbits_cmd->parsed()) {
      const Ring ring = make_ring(orb.h);
      if (orb.m == 0 || orb.n == 0)
        throw UsageError("m and n must be positive");
      const std::uint64_t budget = g.budget_or(kDefaultCensusBudget);
      const CensusReport rep = census_by_enumeration(ring, orb.m, orb.n, budget, g.threads);
      Json summary;
      summary["label_count"] = rep.entries.size();
      summary["expected_label_count"] = expected_label_count(ring, orb.m, orb.n);
      summary["total"] = rep.total;
      std::optional<OrbitProductCheck> product;
      if (verify_product) {
        product = verify_orbit_product(ring, orb.m, orb.n, budget, g.threads);
        summary["product_holds"] = product->holds;
      }
      if (g.format == "csv") {
        std::cout << "omega_label,length\n";
        for (const auto &e : rep.entries)
          std::cout << '"' << label_text(e.label) << "\"," << e.length << '\n';
        std::cerr << summary.dump() << '\n';
      } else {
        Json orbits = Json::array();
        for (const auto &e : rep.entries)
          orbits.push_back({{"omega", io::omega_to_json(e.label)}, {"length", e.length}});
        summary["orbits"] = std::move(orbits);
        emit(summary);
      }
      if (summary["label_count"] != summary["expected_label_count"])
        throw VerificationFailure("orbit count differs from the binomial product");
      if (product && !product->holds)
        throw VerificationFailure("orbit length is not the product of component lengths for " +
                                  label_text(*product->first_violation));
    } else if (stats_cmd->parsed()) {
      const GraphSpec spec = gs.spec();
      const BilGraph graph(spec, g.budget_or(kDefaultRankTableBudget), g.threads);
      const auto vertices = graph.vertex_count();
      const auto omega = clique_number_formula(spec);
      const auto alpha = independence_number_formula(spec);
      Json j;
      j["h"] = spec.h;
      j["m"] = spec.m;
      j["n"] = spec.n;
      j["r"] = spec.r;
      j["vertices"] = vertices ? Json(*vertices) : Json(nullptr);
      j["degree"] = graph.degree();
      if (exact) {
        const std::uint64_t budget = g.budget_or(kDefaultExactBudget);
        const std::uint64_t w = exact_clique_number(graph, budget);
        const std::uint64_t a = exact_independence_number(graph, budget);
        j["omega"] = w;
        j["alpha"] = a;
        j["source"] = "exact";
        if ((omega && w != *omega) || (alpha && a != *alpha))
          throw VerificationFailure("exact numbers differ from h^{nr}, h^{n(m-r)}");
      } else {
        j["omega"] = omega ? Json(*omega) : Json(nullptr);
        j["alpha"] = alpha ? Json(*alpha) : Json(nullptr);
        j["source"] = "formula";
      }
      Json cert = nullptr;
      if (vertices && *vertices <= g.budget_or(kDefaultTraversalBudget)) {
        const Ring &ring = graph.ring();
        const auto clique = build_canonical_clique(
            ring, {spec, std::vector<unsigned>(ring.component_count(), 0)});
        const RankCode code = independent_set_from_code(ring, spec);
        const Coloring col = color_graph(graph, code);
        const SandwichReport sw = sandwich_inequality(*vertices, code.members.size(), clique.size());
        cert = {{"clique_size", clique.size()},
                {"clique_verified", is_clique(graph, clique)},
                {"code_size", code.members.size()},
                {"code_min_distance", pairwise_min_distance(ring, code.members, *vertices)},
                {"colors", col.colors},
                {"coloring_proper", col.proper()},
                {"chi_lower_bound", sw.chi_lower_bound},
                {"sandwich_holds", sw.holds},
                {"sandwich_tight", sw.tight}};
        j["chi"] = col.proper() && col.colors == clique.size() ? Json(col.colors) : Json(nullptr);
      }
      j["chi_certificates"] = cert;
      if (connectivity)
        j["connected"] = check_connectivity(graph, g.budget_or(kDefaultTraversalBudget));
      if (transitivity_samples > 0) {
        const TransitivityReport rep =
            check_vertex_transitivity(graph, transitivity_samples, g.seed_or_notice());
        j["transitivity"] = {{"samples", rep.samples},
                             {"adjacent_pairs", rep.adjacent_pairs},
                             {"automorphism_failures", rep.automorphism_failures},
                             {"translation_failures", rep.translation_failures}};
      }
      emit(j);
      if (!cert.is_null() &&
          !(cert["clique_verified"].get<bool>() && cert["coloring_proper"].get<bool>() &&
            cert["sandwich_tight"].get<bool>()))
        throw VerificationFailure("chromatic number certificates failed");
      if (j.contains("connected") && !j["connected"].get<bool>())
        throw VerificationFailure("graph is not connected");
      if (j.contains("transitivity") && (j["transitivity"]["automorphism_failures"] != 0 ||
                                         j["transitivity"]["translation_failures"] != 0))
        throw VerificationFailure("an automorphism did not preserve adjacency");
    } else if (build_clique_cmd->parsed()) {
      const GraphSpec spec = bc.spec();
      const Ring ring = make_ring(spec.h);
      const Mat S = s_file.empty() ? Mat::identity(spec.h, spec.m) : io::load_matrix(s_file, spec.h);
      const Mat T = t_file.empty() ? Mat::identity(spec.h, spec.n) : io::load_matrix(t_file, spec.h);
      const Mat B0 = b0_file.empty() ? Mat(spec.h, spec.m, spec.n) : io::load_matrix(b0_file, spec.h);
      if (S.rows() != spec.m || S.cols() != spec.m || !is_invertible(ring, S))
        throw UsageError("--S must be an invertible m x m matrix");
      if (T.rows() != spec.n || T.cols() != spec.n || !is_invertible(ring, T))
        throw UsageError("--T must be an invertible n x n matrix");
      if (B0.rows() != spec.m || B0.cols() != spec.n)
        throw UsageError("--B0 must be m x n");
      std::vector<Mat> family;
      for (const Mat &x : build_canonical_clique(ring, {spec, alpha}))
        family.push_back(S * x * T + B0);
      family = normalize_family(spec, family);
      Json meta = {{"alpha", alpha}};
      emit_family(g, out_file, spec.h, spec.m, spec.n, family, meta);
    } else if (classify_cmd->parsed() || ekr_cmd->parsed()) {
      const ShapeArgs &sa = classify_cmd->parsed() ? cc : ek;
      const GraphSpec spec = sa.spec();
      const BilGraph graph(spec, g.budget_or(kDefaultRankTableBudget), g.threads);
      const auto family = io::load_family(family_file, spec.h, spec.m, spec.n);
      if (classify_cmd->parsed()) {
        emit(io::clique_form_to_json(graph.ring(), classify_max_clique(graph, family)));
      } else {
        const auto members = normalize_family(spec, family);
        Json j;
        j["size"] = members.size();
        j["bound"] = *clique_number_formula(spec);
        if (const auto pair = find_non_adjacent_pair(graph, members)) {
          j["intersecting"] = false;
          j["witness"] = {io::matrix_to_json(members[pair->first]),
                          io::matrix_to_json(members[pair->second])};
        } else {
          const EkrReport rep = verify_ekr(graph, members);
          j["intersecting"] = true;
          j["within_bound"] = rep.within_bound;
          j["extremal"] = rep.extremal;
          j["form"] = rep.form ? io::clique_form_to_json(graph.ring(), *rep.form) : Json(nullptr);
        }
        emit(j);
        if (j["intersecting"].get<bool>() && !j["within_bound"].get<bool>())
          throw VerificationFailure("intersecting family exceeds h^{nr}");
      }
    } else if (mrd_cmd->parsed()) {
      const GraphSpec spec = mr.spec();
      const Ring ring = make_ring(spec.h);
      const RankCode code = independent_set_from_code(ring, spec);
      const std::size_t d = pairwise_min_distance(
          ring, code.members, g.budget_or(std::max<std::uint64_t>(kDefaultPairBudget, code.members.size())));
      Json meta = {{"verified_min_distance", d == kInfiniteDistance ? Json(nullptr) : Json(d)},
                   {"linear", code.linear}};
      emit_family(g, out_file, spec.h, spec.m, spec.n, code.members, meta);
    } else if (verify_code_cmd->parsed()) {
      const auto family = io::load_family(family_file, vc_h, vc_m, vc_n);
      if (family.empty())
        throw UsageError("family is empty");
      const Ring ring = make_ring(family.front().modulus());
      const std::size_t d = pairwise_min_distance(ring, family, g.budget_or(kDefaultPairBudget));
      const auto sorted = normalize_family({ring.modulus(), family.front().rows(),
                                            family.front().cols(), 1}, family);
      Json j;
      j["size"] = family.size();
      j["min_distance"] = d == kInfiniteDistance ? Json(nullptr) : Json(d);
      j["required"] = required_d;
      j["linear"] = sorted.size() == family.size() && is_additively_closed(sorted);
      j["ok"] = d >= required_d;
      emit(j);
      if (d < required_d)
        throw VerificationFailure("minimum distance " + std::to_string(d) + " is below " +
                                  std::to_string(required_d));
    } else if (color_cmd->parsed() || cover_cmd->parsed()) {
      const ShapeArgs &sa = color_cmd->parsed() ? co : cv;
      const GraphSpec spec = sa.spec();
      const BilGraph graph(spec, g.budget_or(kDefaultRankTableBudget), g.threads);
      const RankCode code = independent_set_from_code(graph.ring(), spec);
      Json j;
      bool ok = true;
      if (color_cmd->parsed() && !complement) {
        const Coloring col = color_graph(graph, code);
        j = {{"colors", col.colors},
             {"proper", col.proper()},
             {"edges_checked", col.edges_checked},
             {"monochromatic_edges", col.monochromatic_edges}};
        ok = col.proper();
        if (!out_file.empty())
          io::write_file(out_file, Json(col.color_of).dump() + "\n");
      } else {
        const CliqueCover cover = clique_cover_complement(graph, code);
        std::vector<std::uint32_t> color_of(*graph.vertex_count(), 0);
        for (std::size_t c = 0; c < cover.parts.size(); ++c)
          for (VertexId v : cover.parts[c])
            color_of[v] = static_cast<std::uint32_t>(c);
        if (color_cmd->parsed()) {
          j = {{"colors", cover.parts.size()}, {"proper", cover.ok()}};
        } else {
          j = {{"parts", cover.parts.size()},
               {"part_size", cover.parts.empty() ? 0 : cover.parts.front().size()},
               {"disjoint", cover.disjoint},
               {"covers", cover.covers},
               {"parts_are_cliques", cover.parts_are_cliques}};
        }
        ok = cover.ok();
        if (!out_file.empty())
          io::write_file(out_file, (color_cmd->parsed() ? Json(color_of) : Json(cover.parts)).dump() + "\n");
      }
      emit(j);
      if (!ok)
        throw VerificationFailure("colouring or cover check failed");
    } else if (oracle_omega->parsed() || oracle_rank->parsed()) {
      const Ring ring = make_ring(oracle_h);
      const Mat a = io::load_matrix(matrix_file, oracle_h);
      if (oracle_omega->parsed()) {
        const InvariantFactors omega = oracle::omega_via_minors(ring, a);
        if (g.format == "csv")
          emit_omega_csv(ring, omega);
        else
          emit({{"omega", io::omega_to_json(omega)}});
      } else {
        emit({{"inner_rank", oracle::inner_rank_by_factorization(
                                 ring, a, g.budget_or(oracle::kDefaultFactorizationBudget))}});
      }
    } else if (oracle_graph->parsed()) {
      const GraphSpec spec = og.spec();
      const BilGraph graph(spec);
      const auto vertices = graph.vertex_count();
      if (!vertices || *vertices > 256)
        throw BudgetExceeded("oracle graph search is limited to 256 vertices");
      oracle::AdjacencyMatrix adj(*vertices, std::vector<bool>(*vertices, false));
      for (VertexId u = 0; u < *vertices; ++u)
        for (VertexId v = 0; v < *vertices; ++v)
          adj[u][v] = u != v && graph.adjacent(u, v);
      emit({{"omega", oracle::exact_clique(adj).size()}, {"alpha", oracle::exact_mis(adj).size()}});
    } else if (selftest_cmd->parsed()) {
      const AcceptanceOptions opt{g.threads, g.seed_or_notice()};
      if (only.empty())
        for (int id = 1; id <= kCriterionCount; ++id)
          only.push_back(id);
      bool all = true;
      Json results = Json::array();
      for (int id : only) {
        const CriterionResult r = run_criterion(id, opt);
        all = all && r.passed;
        if (g.format == "json")
          results.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        else
          std::cout << format_result(r) << std::endl;
      }
      if (g.format == "json")
        emit({{"level", level}, {"passed", all}, {"criteria", results}});
      if (!all)
        throw VerificationFailure("acceptance suite failed");
    }
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded &e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const VerificationFailure &e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

} // namespace zhmat::cli

#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zhmat/bilgraph.hpp"
#include "zhmat/matrix.hpp"

namespace zhmat {

/// Parameters of the block family
///   [[ Z_h^{r x r},          J_alpha^{r x (n-r)} ],
///    [ J_{s-alpha}^{(m-r) x r}, 0               ]]
/// with every alpha_i in {0, s_i}. It has h^{nr} members only when alpha = 0
/// or m = n; other combinations are rejected.
struct CanonicalCliqueSpec {
  GraphSpec spec;
  std::vector<unsigned> alpha;

  void validate(const Ring &ring) const;
};

/// Members of the canonical family, sorted.
std::vector<Mat> build_canonical_clique(const Ring &ring, const CanonicalCliqueSpec &cspec);

enum class CliqueKind {
  Row,   // S * C(0,...,0) + B0
  Col,   // C(s_1,...,s_t) * T + B0, m = n
  Mixed, // S * C(alpha) * T + B0, m = n, alpha not 0 and not s
};

std::string to_string(CliqueKind kind);
std::optional<CliqueKind> clique_kind_from_string(const std::string &name);

struct CliqueForm {
  CliqueKind kind;
  std::optional<Mat> S; // Row, Mixed
  std::optional<Mat> T; // Col, Mixed
  std::optional<std::vector<unsigned>> alpha; // Mixed
  Mat B0;
};

/// The alpha of the canonical family a form is built on: zeros for Row,
/// (s_1, ..., s_t) for Col, the stored vector for Mixed.
std::vector<unsigned> form_alpha(const Ring &ring, const CliqueForm &form);
/// S * C(alpha) * T + B0 with absent transforms read as identities; sorted.
std::vector<Mat> rebuild_clique(const Ring &ring, const GraphSpec &spec, const CliqueForm &form);

/// Sorts and removes duplicates; every member must be an m x n matrix over Z_h.
std::vector<Mat> normalize_family(const GraphSpec &spec, std::span<const Mat> family);

/// Index pair of two distinct members whose difference has inner rank > r.
std::optional<std::pair<std::size_t, std::size_t>>
find_non_adjacent_pair(const BilGraph &graph, std::span<const Mat> family);
/// Every two distinct members are adjacent (the family is r-intersecting).
bool is_clique(const BilGraph &graph, std::span<const Mat> family);

/// Recovers one of the three shapes for a maximum clique. Translates by the
/// smallest member B0, decides for each prime component whether the
/// projected clique is row type (its column module is a free rank-r summand)
/// or column type (same for the row module), reads S_i or T_i off the Smith
/// form of the stacked members, and assembles the global transforms by CRT.
/// The returned form is verified by rebuilding the family.
///
/// Throws UsageError when the family is not a clique of size h^{nr}, and
/// VerificationFailure when no shape matches.
CliqueForm classify_max_clique(const BilGraph &graph, std::span<const Mat> family);

struct EkrReport {
  std::uint64_t size;
  std::uint64_t bound; // h^{nr}
  bool within_bound;
  bool extremal;
  std::optional<CliqueForm> form;
};

/// Throws UsageError if the family is not r-intersecting.
EkrReport verify_ekr(const BilGraph &graph, std::span<const Mat> family);

/// Every clique of size h^{nr}, by exact enumeration. Needs h^{mn} <= budget.
std::vector<std::vector<Mat>> enumerate_max_cliques(const BilGraph &graph,
                                                    std::uint64_t budget = kDefaultExactBudget);

/// A form with random invertible transforms and translate. `alpha` is only
/// read for Mixed.
CliqueForm random_clique_form(const Ring &ring, const GraphSpec &spec, CliqueKind kind,
                              const std::vector<unsigned> &alpha, Rng &rng);

} // namespace zhmat

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "zhmat/clique.hpp"
#include "zhmat/matrix.hpp"
#include "zhmat/smith.hpp"

namespace zhmat::io {

using Json = nlohmann::ordered_json;

// Matrix: {"h": int, "rows": int, "cols": int, "entries": [[...], ...]}.
Json matrix_to_json(const Mat &a);
/// Accepts a matrix object, or a bare list of rows when h is given.
Mat matrix_from_json(const Json &j, std::optional<std::uint64_t> h = std::nullopt);

Json omega_to_json(const InvariantFactors &omega);

/// Indented JSON that keeps arrays of depth <= 2 (matrix rows, omega) on one line.
std::string to_text(const Json &j);

// Family: {"h", "rows", "cols", "size", "matrices": [entries, ...]} plus any
// extra metadata merged in at the top level.
Json family_to_json(std::uint64_t h, std::size_t m, std::size_t n, std::span<const Mat> family,
                    const Json &metadata = Json::object());
/// Accepts the family object above or a JSON list of matrix objects.
std::vector<Mat> family_from_json(const Json &j);

/// One matrix per line, row-major, comma separated. Blank lines and lines
/// starting with '#' are skipped.
std::string family_to_csv(std::span<const Mat> family);
std::vector<Mat> family_from_csv(const std::string &text, std::uint64_t h, std::size_t m,
                                 std::size_t n);

Json clique_form_to_json(const Ring &ring, const CliqueForm &form);
CliqueForm clique_form_from_json(const Json &j);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

/// JSON if the first non-blank character is '{' or '['; otherwise CSV, which
/// needs h, m, n.
std::vector<Mat> load_family(const std::string &path, std::optional<std::uint64_t> h,
                             std::optional<std::size_t> m, std::optional<std::size_t> n);
Mat load_matrix(const std::string &path, std::optional<std::uint64_t> h);

} // namespace zhmat::io

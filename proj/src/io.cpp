#include "zhmat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "zhmat/error.hpp"

namespace zhmat::io {

namespace {

Json rows_of(const Mat &a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j)
      row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat from_rows_json(const Json &rows, std::uint64_t h) {
  if (!rows.is_array() || rows.empty())
    throw UsageError("matrix entries must be a non-empty list of rows");
  const std::size_t m = rows.size();
  const std::size_t n = rows[0].is_array() ? rows[0].size() : 0;
  if (n == 0)
    throw UsageError("matrix rows must be non-empty lists");
  std::vector<Residue> entries;
  entries.reserve(m * n);
  for (const auto &row : rows) {
    if (!row.is_array() || row.size() != n)
      throw UsageError("matrix rows must all have the same length");
    for (const auto &x : row) {
      if (!x.is_number_integer())
        throw UsageError("matrix entries must be integers");
      const auto v = x.get<std::int64_t>();
      if (v < 0 || static_cast<std::uint64_t>(v) >= h)
        throw UsageError("matrix entry " + std::to_string(v) + " outside [0, h)");
      entries.push_back(static_cast<Residue>(v));
    }
  }
  return Mat::from_entries(h, m, n, std::move(entries));
}

std::uint64_t required_uint(const Json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<std::int64_t>() <= 0)
    throw UsageError(std::string("missing or invalid field \"") + key + "\"");
  return j[key].get<std::uint64_t>();
}

} // namespace

Json matrix_to_json(const Mat &a) {
  Json j;
  j["h"] = a.modulus();
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["entries"] = rows_of(a);
  return j;
}

Mat matrix_from_json(const Json &j, std::optional<std::uint64_t> h) {
  if (j.is_array()) {
    if (!h)
      throw UsageError("bare matrix rows need an explicit modulus");
    return from_rows_json(j, *h);
  }
  if (!j.is_object())
    throw UsageError("matrix must be a JSON object");
  const std::uint64_t hj = required_uint(j, "h");
  if (h && *h != hj)
    throw UsageError("matrix modulus " + std::to_string(hj) + " does not match h = " +
                     std::to_string(*h));
  if (!j.contains("entries"))
    throw UsageError("matrix object has no \"entries\"");
  Mat a = from_rows_json(j["entries"], hj);
  if ((j.contains("rows") && required_uint(j, "rows") != a.rows()) ||
      (j.contains("cols") && required_uint(j, "cols") != a.cols()))
    throw UsageError("matrix shape does not match its entries");
  return a;
}

Json omega_to_json(const InvariantFactors &omega) {
  Json j = Json::array();
  for (const auto &row : omega.rows)
    j.push_back(row);
  return j;
}

namespace {

std::size_t array_depth(const Json &j) {
  if (!j.is_array())
    return j.is_object() ? 99 : 0;
  std::size_t d = 0;
  for (const auto &x : j)
    d = std::max(d, array_depth(x));
  return d + 1;
}

void write_text(std::ostream &os, const Json &j, int indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      os << pad << Json(it.key()).dump() << ": ";
      write_text(os, it.value(), indent + 2);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(indent, ' ') << '}';
  } else if (j.is_array() && !j.empty() && array_depth(j) > 2) {
    os << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      os << pad;
      write_text(os, j[k], indent + 2);
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(indent, ' ') << ']';
  } else {
    os << j.dump();
  }
}

} // namespace

std::string to_text(const Json &j) {
  std::ostringstream os;
  write_text(os, j, 0);
  os << '\n';
  return os.str();
}

Json family_to_json(std::uint64_t h, std::size_t m, std::size_t n, std::span<const Mat> family,
                    const Json &metadata) {
  Json j;
  j["h"] = h;
  j["rows"] = m;
  j["cols"] = n;
  j["size"] = family.size();
  for (auto it = metadata.begin(); it != metadata.end(); ++it)
    j[it.key()] = it.value();
  Json list = Json::array();
  for (const auto &a : family)
    list.push_back(rows_of(a));
  j["matrices"] = std::move(list);
  return j;
}

std::vector<Mat> family_from_json(const Json &j) {
  std::vector<Mat> out;
  if (j.is_array()) {
    for (const auto &x : j)
      out.push_back(matrix_from_json(x));
  } else if (j.is_object() && j.contains("matrices")) {
    const std::uint64_t h = required_uint(j, "h");
    for (const auto &x : j["matrices"])
      out.push_back(matrix_from_json(x, h));
    if (j.contains("rows") && j.contains("cols"))
      for (const auto &a : out)
        if (a.rows() != required_uint(j, "rows") || a.cols() != required_uint(j, "cols"))
          throw UsageError("family member shape does not match the declared shape");
  } else {
    throw UsageError("family must be a list of matrices or an object with \"matrices\"");
  }
  for (const auto &a : out)
    if (a.modulus() != out.front().modulus() || a.rows() != out.front().rows() ||
        a.cols() != out.front().cols())
      throw UsageError("family members must share modulus and shape");
  return out;
}

std::string family_to_csv(std::span<const Mat> family) {
  std::ostringstream os;
  for (const auto &a : family) {
    const auto e = a.entries();
    for (std::size_t k = 0; k < e.size(); ++k)
      os << (k ? "," : "") << e[k];
    os << '\n';
  }
  return os.str();
}

std::vector<Mat> family_from_csv(const std::string &text, std::uint64_t h, std::size_t m,
                                 std::size_t n) {
  std::vector<Mat> out;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#')
      continue;
    std::vector<Residue> entries;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(cell, &used);
      } catch (const std::exception &) {
        throw UsageError("line " + std::to_string(lineno) + ": not an integer: " + cell);
      }
      if (v < 0 || static_cast<std::uint64_t>(v) >= h)
        throw UsageError("line " + std::to_string(lineno) + ": entry outside [0, h)");
      entries.push_back(static_cast<Residue>(v));
    }
    if (entries.size() != m * n)
      throw UsageError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(m * n) + " entries");
    out.push_back(Mat::from_entries(h, m, n, std::move(entries)));
  }
  return out;
}

Json clique_form_to_json(const Ring &ring, const CliqueForm &form) {
  Json j;
  j["kind"] = to_string(form.kind);
  j["alpha"] = form_alpha(ring, form);
  j["S"] = form.S ? matrix_to_json(*form.S) : Json(nullptr);
  j["T"] = form.T ? matrix_to_json(*form.T) : Json(nullptr);
  j["B0"] = matrix_to_json(form.B0);
  return j;
}

CliqueForm clique_form_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("B0"))
    throw UsageError("clique form needs \"kind\" and \"B0\"");
  const auto kind = clique_kind_from_string(j["kind"].get<std::string>());
  if (!kind)
    throw UsageError("unknown clique kind " + j["kind"].dump());
  CliqueForm form{*kind, std::nullopt, std::nullopt, std::nullopt, matrix_from_json(j["B0"])};
  if (j.contains("S") && !j["S"].is_null())
    form.S = matrix_from_json(j["S"]);
  if (j.contains("T") && !j["T"].is_null())
    form.T = matrix_from_json(j["T"]);
  if (*kind == CliqueKind::Mixed && j.contains("alpha"))
    form.alpha = j["alpha"].get<std::vector<unsigned>>();
  return form;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw UsageError("cannot write " + path);
}

namespace {

bool looks_like_json(const std::string &text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

Json parse_json(const std::string &text, const std::string &path) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw UsageError(path + ": " + e.what());
  }
}

} // namespace

std::vector<Mat> load_family(const std::string &path, std::optional<std::uint64_t> h,
                             std::optional<std::size_t> m, std::optional<std::size_t> n) {
  const std::string text = read_file(path);
  if (looks_like_json(text)) {
    auto family = family_from_json(parse_json(text, path));
    for (const auto &a : family)
      if ((h && a.modulus() != *h) || (m && a.rows() != *m) || (n && a.cols() != *n))
        throw UsageError(path + ": family does not match the requested h, m, n");
    return family;
  }
  if (!h || !m || !n)
    throw UsageError(path + ": CSV families need --h, --m and --n");
  return family_from_csv(text, *h, *m, *n);
}

Mat load_matrix(const std::string &path, std::optional<std::uint64_t> h) {
  const std::string text = read_file(path);
  if (!looks_like_json(text))
    throw UsageError(path + ": matrix files must be JSON");
  return matrix_from_json(parse_json(text, path), h);
}

} // namespace zhmat::io

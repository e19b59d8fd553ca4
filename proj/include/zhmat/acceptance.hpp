#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zhmat {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct AcceptanceOptions {
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

inline constexpr int kCriterionCount = 10;

/// Runs one criterion (1..10). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions &options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options);

/// "PASS [3] name (1.2 s): detail"
std::string format_result(const CriterionResult &result);

} // namespace zhmat

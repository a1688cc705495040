#pragma once

// End-to-end checks with their time budgets. Shared by the acceptance test
// binary and `sumkit check --all`.

#include <cstdint>
#include <string>
#include <vector>

namespace sumkit::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ok = false;         // every check held
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  bool pass() const { return ok && seconds < limit_seconds; }
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

int criterion_count();
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

/// "PASS  3  Hurwitz oracle equivalence  (1.20 s / 60 s)  detail".
std::string format_line(const CriterionResult& r);

}  // namespace sumkit::acceptance

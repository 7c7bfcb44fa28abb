#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace k3cubic::verify {

struct CheckResult {
  int criterion;  // 1..11, 0 for the strata bookkeeping
  std::string group;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass;
  double seconds;
};

struct SuiteResult {
  std::vector<CheckResult> checks;
  double seconds = 0;
  std::uint32_t seed = 0;
  bool pass() const;
  /// All checks of a criterion pass (false when it has no checks).
  bool criterion_pass(int criterion) const;
};

struct GroupInfo {
  std::string name;
  int criterion;
  std::string title;
};

/// Registry order; output is always in this order.
const std::vector<GroupInfo>& groups();

constexpr std::uint32_t kDefaultSeed = 20240917;

/// Runs every group, or only the named one (DomainError for unknown names).
SuiteResult run_verification(const std::optional<std::string>& group = std::nullopt,
                             std::uint32_t seed = kDefaultSeed);

}  // namespace k3cubic::verify

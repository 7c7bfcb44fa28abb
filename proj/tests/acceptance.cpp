// One line per acceptance criterion; nonzero exit if any fails.
#include <cstdio>

#include "k3cubic/verify.hpp"

using namespace k3cubic;

int main() {
  const auto result = verify::run_verification();
  bool ok = true;
  for (int criterion = 1; criterion <= 11; ++criterion) {
    const verify::GroupInfo* info = nullptr;
    for (const auto& g : verify::groups())
      if (g.criterion == criterion) info = &g;
    const bool pass = result.criterion_pass(criterion);
    ok = ok && pass;
    std::printf("criterion %2d %s  %s\n", criterion, pass ? "PASS" : "FAIL", info ? info->title.c_str() : "?");
    if (!pass)
      for (const auto& c : result.checks)
        if (c.criterion == criterion && !c.pass)
          std::printf("    %s: expected %s, computed %s\n", c.name.c_str(), c.expected.c_str(), c.computed.c_str());
  }
  const bool strata = result.criterion_pass(0);
  std::printf("stratum bookkeeping %s\n", strata ? "PASS" : "FAIL");
  std::printf("%zu checks in %.1f s\n", result.checks.size(), result.seconds);
  return ok && strata ? 0 : 1;
}

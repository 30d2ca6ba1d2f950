// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "digitblocks/verify.hpp"

int main() {
  using namespace digitblocks::verify;
  const VerifyOptions options;
  int failed = 0;
  for (const auto& c : criteria()) {
    const auto result = run_criterion(c, options);
    std::printf("%s criterion %2d (%s): %s [%.2fs]\n", result.pass ? "PASS" : "FAIL", c.number, c.suite.c_str(),
                c.title.c_str(), result.seconds);
    if (!result.pass) {
      ++failed;
      for (const auto& r : result.records) {
        if (!r.pass) std::printf("    failed %s: lhs=%s rhs=%s tol=%g\n", r.id.c_str(), r.lhs.c_str(), r.rhs.c_str(), r.tolerance);
      }
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria().size());
  return failed == 0 ? 0 : 1;
}

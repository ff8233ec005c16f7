// Acceptance suite: runs every criterion at full budget and prints one
// PASS/FAIL line per criterion. Exit code 0 iff everything passes.

#include <algorithm>
#include <cstdio>
#include <thread>

#include "obav/verify.hpp"

int main() {
  using namespace obav::verify;
  const int threads =
      std::max(1, std::min(8, static_cast<int>(std::thread::hardware_concurrency())));

  const auto results = run_all(Budget::Full, threads);

  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass();
    std::printf("%s  criterion %2d: %s (%zu checks, %.2f s)\n", r.pass() ? "PASS" : "FAIL",
                r.id, r.title.c_str(), r.checks.size(), r.seconds);
    if (!r.pass()) {
      for (const auto& c : r.checks)
        if (!c.pass)
          std::printf("      FAIL %s: expected %s, got %s\n", c.name.c_str(),
                      c.expected.c_str(), c.actual.c_str());
    }
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES");
  return all_pass ? 0 : 1;
}

// Acceptance gate: runs every release criterion with the pinned seed and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failing criteria (0 = release-ready).

#include <cstdio>
#include <exception>

#include "bnou/suite.hpp"

int main() {
  std::vector<bnou::CriterionResult> results;
  try {
    results = bnou::run_acceptance_criteria(20260819);
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance harness aborted: %s\n", e.what());
    return 99;
  }

  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str());
    if (!r.pass && !r.detail.empty()) std::printf(" -- %s", r.detail.c_str());
    std::printf("\n");
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures;
}

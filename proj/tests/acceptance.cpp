// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "polyop/scenarios.hpp"
#include "property_laws.hpp"

int main() {
  using namespace polyop;
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  int number = 0;

  for (const auto& entry : scenarios::registry()) {
    const auto r = scenarios::run(entry);
    std::printf("%-4s criterion %2d  %s\n", r.passed ? "PASS" : "FAIL", ++number, r.name.c_str());
    if (!r.passed) {
      ++failed;
      std::cout << "      " << r.diff.dump() << '\n';
    }
  }

  bool laws_ok = true;
  std::string detail;
  std::size_t total = 0;
  for (const auto& o : laws::all_laws(200)) {
    total += o.cases;
    if (o.cases < 100 || o.failures != 0) {
      laws_ok = false;
      if (detail.empty()) detail = o.name + ": " + std::to_string(o.failures) + " failures; " + o.first_failure;
    }
  }
  std::printf("%-4s criterion %2d  property_suites (%zu cases)\n", laws_ok ? "PASS" : "FAIL", ++number, total);
  if (!laws_ok) {
    ++failed;
    std::cout << "      " << detail << '\n';
  }

  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %d criteria passed in %.2f s\n", number - failed, number, secs);
  return failed == 0 ? 0 : 1;
}

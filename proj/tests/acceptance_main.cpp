// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <iostream>

#include "symquot/acceptance.hpp"

int main() {
  bool ok = true;
  symquot::run_acceptance([&](const symquot::CriterionResult& r) {
    std::cout << symquot::format_result(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? 0 : 1;
}

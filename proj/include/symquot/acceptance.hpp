#pragma once

#include <functional>
#include <string>
#include <vector>

namespace symquot {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, or a short summary
  double seconds = 0;
  double limit_seconds = 0;
};

inline constexpr int kCriterionCount = 9;

// Runs one criterion (1..9). Exceeding the time limit counts as a failure.
CriterionResult run_criterion(int id);

// Runs all criteria in order, calling `each` after every one.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& each = {});

// "PASS [3] TCR gate (1.23 s / 300 s): detail"
std::string format_result(const CriterionResult& r);

// Construction tags of every fixture used by criteria 1-7.
std::vector<std::string> acceptance_fixture_tags();

}  // namespace symquot

#pragma once

#include <string>
#include <vector>

namespace nczar {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // short description of a failing sample, if any
};

struct Report {
  std::string case_name;
  int N = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

}  // namespace nczar

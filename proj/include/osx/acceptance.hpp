#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace osx {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// The twelve release-gate properties, exact arithmetic throughout.
std::vector<CheckResult> run_acceptance(uint64_t seed);

}  // namespace osx

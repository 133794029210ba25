#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "osx/acceptance.hpp"

int main(int argc, char** argv) {
  uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  int failed = 0;
  for (const osx::CheckResult& r : osx::run_acceptance(seed)) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name
              << "  (" << r.detail << ")" << std::endl;
    if (!r.pass) ++failed;
  }
  if (failed) {
    std::cout << failed << " properties failed" << std::endl;
    return 1;
  }
  std::cout << "all properties hold" << std::endl;
  return 0;
}

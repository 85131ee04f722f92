// Prints one PASS/FAIL line per acceptance criterion. With arguments, runs
// only the listed criterion numbers.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "orthokit/suite/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<std::size_t> which;
  for (int k = 1; k < argc; ++k) {
    const long n = std::strtol(argv[k], nullptr, 10);
    if (n < 1 || n > static_cast<long>(orthokit::acceptance::criterion_count)) {
      std::fprintf(stderr, "usage: %s [criterion 1-10]...\n", argv[0]);
      return 2;
    }
    which.push_back(static_cast<std::size_t>(n));
  }
  const auto r = orthokit::acceptance::run(which);
  for (const auto& c : r.checks) {
    const bool ok = !orthokit::is_failure(c.status);
    const auto ms = r.timing_ms.count(c.name) ? r.timing_ms.at(c.name) : 0.0;
    std::printf("%s %s: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str(), ms);
    if (!ok && !c.witness.empty()) std::printf("     witness: %s\n", c.witness.c_str());
  }
  return r.passed() ? 0 : 1;
}

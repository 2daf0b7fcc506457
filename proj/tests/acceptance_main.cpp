#include <cstdio>

#include "symtrop/acceptance.hpp"

int main() {
  int failures = 0;
  for (const auto& c : symtrop::acceptance::run_all()) {
    std::printf("[%s] %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.empty() ? "" : ": ", c.detail.c_str());
    std::fflush(stdout);
    if (!c.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}

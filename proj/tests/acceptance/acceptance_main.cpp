#include "schwarz_tools/verify.hpp"

#include <cstdio>

int main() {
  int failures = 0;
  for (const auto& result : schwarz::tools::run_all()) {
    std::puts(schwarz::tools::format_result(result).c_str());
    if (!result.passed) ++failures;
  }
  std::printf("%s\n", failures == 0 ? "all acceptance criteria passed" : "acceptance FAILED");
  return failures == 0 ? 0 : 1;
}

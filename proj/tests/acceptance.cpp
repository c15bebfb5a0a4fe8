#include <algorithm>
#include <iostream>

#include "lcass/acceptance.hpp"

int main() {
  const auto results = lcass::acceptance::run_all();
  for (const auto& r : results) std::cout << r.line() << std::endl;
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return ok ? 0 : 1;
}

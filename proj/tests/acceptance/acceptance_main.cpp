// One PASS/FAIL line per criterion; exit status 1 if any criterion fails.

#include <iostream>

#include "ibc/reports/acceptance.hpp"

int main() {
  using namespace ibc::reports;
  const auto results = run_acceptance(AcceptanceOptions{}, [](const CriterionResult& r) {
    std::cout << result_line(r) << std::endl;
  });
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace ibc::reports {

struct CriterionResult {
  int id = 0;
  std::string description;
  std::string expected;
  std::string computed;
  std::string tolerance;
  bool pass = false;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  /// Criteria whose inputs get a deliberate perturbation (negative control).
  std::set<int> perturb;
  /// Criteria to run; empty runs all.
  std::set<int> only;
};

struct Criterion {
  int id;
  std::string description;
  std::function<CriterionResult(const AcceptanceOptions&)> run;
};

/// The 13 acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs the selected criteria. The cosh eigenvalue row (3) is gated on the
/// oracle-agreement row (2) when both run.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

bool all_passed(const std::vector<CriterionResult>& results);

/// One object per criterion with keys criterion_id, description, expected,
/// computed, tolerance, pass.
void write_results_json(std::ostream& os, const std::vector<CriterionResult>& results);
void write_results_csv(std::ostream& os, const std::vector<CriterionResult>& results);
/// "PASS [ 1] description | computed ..." lines.
std::string result_line(const CriterionResult& r);

}  // namespace ibc::reports

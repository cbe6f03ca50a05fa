#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace exspec {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::size_t jobs = 1;
  /// Restrict to these criterion ids; empty runs all eight.
  std::vector<int> only;
};

/// Runs the acceptance criteria in order, reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [3] cospectral certification: ... (0.8 s)"; the timing is optional
/// so that output can be reproducible.
std::string format_result(const CriterionResult& r, bool with_time = true);

}  // namespace exspec

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace frl {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult()> run;
};

const std::vector<Criterion>& acceptance_criteria();

// Runs the selected criteria (all when `ids` is empty); calls on_result as each finishes.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace frl

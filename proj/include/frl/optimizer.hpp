#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "frl/eigenfunction.hpp"

namespace frl {

struct SearchConfig {
  int max_index = 3;  // N: search over alpha_0..alpha_N
  double initial_step = 1e-2;
  double shrink = 0.5;
  double min_step = 1e-7;
  int max_passes = 4000;
  std::uint64_t seed = 1;
  double acceptance_tol = 0.0;  // a trial must beat the incumbent by more than this
  int pivot = 0;  // index re-solved from f(0) = 0 after each trial move

  void validate() const;
};

struct SearchLogEntry {
  int pass = 0;
  int coordinate = -1;  // -1 for a step shrink
  double step = 0.0;
  double objective = 0.0;
};

struct SearchResult {
  EigenPlusFunction best;
  double objective = 0.0;
  double start_objective = 0.0;
  int passes = 0;
  int evaluations = 0;
  std::vector<SearchLogEntry> log;
};

// Certified largest root of a normalized f; nullopt when f is not normalized or is
// negative near infinity. Throws DomainError for the zero function.
std::optional<double> objective(const EigenPlusFunction& f);

// Coordinate search in the variables beta_n = alpha_n H_{4n}(0). beta_pivot keeps sum beta_n = 0;
// the other coordinates are perturbed by +-step in a seeded order.
SearchResult greedy_search(const EigenPlusFunction& start, const SearchConfig& config,
                           const std::function<void(const SearchLogEntry&)>& on_log = {});

}  // namespace frl

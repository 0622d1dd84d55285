#include "frl/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "frl/errors.hpp"

namespace frl {

void SearchConfig::validate() const {
  if (max_index < 1) throw DomainError("SearchConfig: max_index must be >= 1");
  if (!(min_step > 0.0) || !(initial_step > min_step)) {
    throw DomainError("SearchConfig: requires initial_step > min_step > 0");
  }
  if (!(shrink > 0.0 && shrink < 1.0)) throw DomainError("SearchConfig: shrink must lie in (0, 1)");
  if (max_passes < 1) throw DomainError("SearchConfig: max_passes must be >= 1");
  if (pivot < 0 || pivot > max_index) throw DomainError("SearchConfig: pivot must lie in 0..max_index");
  if (!(acceptance_tol >= 0.0)) throw DomainError("SearchConfig: acceptance_tol must be >= 0");
}

std::optional<double> objective(const EigenPlusFunction& f) {
  const double scale = [&] {
    double s = 0.0;
    for (int n = 0; n <= f.max_index(); ++n) {
      s += std::fabs(f.coeffs()[static_cast<std::size_t>(n)] * hermite_4n_at_zero(n).to_double());
    }
    return s;
  }();
  if (scale == 0.0) throw DomainError("objective: zero function");
  if (std::fabs(f.value_at_zero()) > 1e-12 * scale) return std::nullopt;
  try {
    return root_certificate(f).largest_root;
  } catch (const NegativeAtInfinityError&) {
    return std::nullopt;
  }
}

namespace {

std::vector<double> at_zero(int max_index) {
  std::vector<double> h(static_cast<std::size_t>(max_index) + 1);
  for (int n = 0; n <= max_index; ++n) h[static_cast<std::size_t>(n)] = hermite_4n_at_zero(n).to_double();
  return h;
}

EigenPlusFunction from_beta(std::vector<double> beta, const std::vector<double>& h, std::size_t pivot) {
  beta[pivot] = 0.0;
  beta[pivot] = -std::accumulate(beta.begin(), beta.end(), 0.0);
  std::vector<double> alpha(beta.size());
  for (std::size_t n = 0; n < beta.size(); ++n) alpha[n] = beta[n] / h[n];
  return EigenPlusFunction(std::move(alpha), true);
}

std::vector<double> beta_of(const EigenPlusFunction& f, const std::vector<double>& h) {
  std::vector<double> beta(h.size(), 0.0);
  for (int n = 0; n <= f.max_index(); ++n) {
    beta[static_cast<std::size_t>(n)] = f.coeffs()[static_cast<std::size_t>(n)] * h[static_cast<std::size_t>(n)];
  }
  return beta;
}

}  // namespace

SearchResult greedy_search(const EigenPlusFunction& start, const SearchConfig& config,
                           const std::function<void(const SearchLogEntry&)>& on_log) {
  config.validate();
  if (start.max_index() > config.max_index) {
    throw DomainError("greedy_search: start uses more basis functions than max_index");
  }
  const auto h = at_zero(config.max_index);
  auto beta = beta_of(start, h);
  const auto start_value = objective(start);
  if (!start_value) throw DomainError("greedy_search: start is infeasible (not normalized or negative at infinity)");

  EigenPlusFunction best = start;
  double best_value = *start_value;
  SearchResult result{best, best_value, *start_value, 0, 1, {}};

  std::mt19937_64 rng(config.seed);
  std::vector<int> order;
  for (int n = 0; n <= config.max_index; ++n) {
    if (n != config.pivot) order.push_back(n);
  }
  const auto record = [&](const SearchLogEntry& entry) {
    result.log.push_back(entry);
    if (on_log) on_log(entry);
  };

  double step = config.initial_step;
  int pass = 0;
  while (step >= config.min_step && pass < config.max_passes) {
    std::shuffle(order.begin(), order.end(), rng);
    bool accepted = false;
    for (int c : order) {
      for (double direction : {1.0, -1.0}) {
        auto trial = beta;
        trial[static_cast<std::size_t>(c)] += direction * step;
        const auto f = from_beta(trial, h, static_cast<std::size_t>(config.pivot));
        const auto value = objective(f);
        ++result.evaluations;
        if (value && *value < best_value - config.acceptance_tol) {
          beta = trial;
          best = f;
          best_value = *value;
          accepted = true;
          record({pass, c, step, best_value});
          break;
        }
      }
    }
    ++pass;
    if (!accepted) {
      step *= config.shrink;
      record({pass, -1, step, best_value});
    }
  }
  result.passes = pass;
  result.best = best;
  result.objective = best_value;
  return result;
}

}  // namespace frl

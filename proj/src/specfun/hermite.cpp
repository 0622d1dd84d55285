#include <cmath>
#include <numbers>

#include "frl/detail/scaled_pair.hpp"
#include "frl/errors.hpp"
#include "frl/specfun.hpp"

namespace frl {

namespace {

// Walks e^{-x^2/2} H_k(x) for k = 0..n_max, handing each term to `visit`.
// The weight rides on H_0 in mantissa/exponent form.
template <class Visit>
void walk_weighted(int n_max, double x, Visit&& visit) {
  if (n_max < 0) throw DomainError("hermite: degree must be >= 0");
  if (!std::isfinite(x)) throw DomainError("hermite: argument must be finite");
  const ScaledValue weight = ScaledValue::exp(-0.5 * x * x);
  detail::ScaledPair pair;
  pair.prev = 0.0;
  pair.cur = weight.mantissa();
  pair.exponent = weight.exponent();
  visit(0, pair.current());
  for (int k = 0; k < n_max; ++k) {
    const double next = 2.0 * x * pair.cur - 2.0 * k * pair.prev;
    pair.prev = pair.cur;
    pair.cur = next;
    pair.rebalance();
    visit(k + 1, pair.current());
  }
}

ScaledValue factorial_for_norm(int n) {
  if (n <= 1000) return factorial_scaled(n);
  return ScaledValue::exp(std::lgamma(n + 1.0));
}

}  // namespace

ScaledValue hermite_weighted(int n, double x) {
  ScaledValue last;
  walk_weighted(n, x, [&](int, const ScaledValue& v) { last = v; });
  return last;
}

std::vector<ScaledValue> hermite_weighted_sequence(int n_max, double x) {
  std::vector<ScaledValue> out;
  out.reserve(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
  walk_weighted(n_max, x, [&](int, const ScaledValue& v) { out.push_back(v); });
  return out;
}

double hermite(int n, double x) {
  if (n < 0) throw DomainError("hermite: degree must be >= 0");
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double psi(int n, double x) {
  const double t = std::sqrt(2.0 * std::numbers::pi) * x;
  const ScaledValue norm = ScaledValue::exp2(0.25 - 0.5 * n) / factorial_for_norm(n).sqrt();
  return (hermite_weighted(n, t) * norm).to_double();
}

double hermite_normalized(int n, double x) {
  if (n < 0) throw DomainError("hermite_normalized: degree must be >= 0");
  const ScaledValue ratio = gamma_scaled(0.5 * n + 1.0) / gamma_scaled(n + 1.0);
  return (ratio * hermite_weighted(n, x)).to_double();
}

double hermite_asymptotic(int n, double x, AsymptoticOrder order) {
  if (n < 1) throw DomainError("hermite_asymptotic: requires n >= 1");
  const double root = std::sqrt(2.0 * n + 1.0);
  // n pi / 2 reduced modulo 2 pi exactly.
  const double phase = root * x - (n % 4) * (std::numbers::pi / 2.0);
  double value = std::cos(phase);
  if (order == AsymptoticOrder::Corrected) value += x * x * x / (6.0 * root) * std::sin(phase);
  return value;
}

}  // namespace frl

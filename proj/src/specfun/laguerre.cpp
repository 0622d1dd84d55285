#include <cmath>
#include <numbers>

#include "frl/detail/scaled_pair.hpp"
#include "frl/errors.hpp"
#include "frl/specfun.hpp"

namespace frl {

namespace {

template <class Visit>
void walk_laguerre(int n_max, double nu, double t, Visit&& visit) {
  if (n_max < 0) throw DomainError("laguerre: degree must be >= 0");
  if (!(nu > -1.0) || !std::isfinite(nu)) throw DomainError("laguerre: requires nu > -1");
  if (!std::isfinite(t)) throw DomainError("laguerre: argument must be finite");
  detail::ScaledPair pair;
  pair.prev = 0.0;
  pair.cur = 1.0;
  visit(0, pair.current());
  for (int k = 0; k < n_max; ++k) {
    // (k+1) L_{k+1} = (2k + 1 + nu - t) L_k - (k + nu) L_{k-1}
    const double next = ((2.0 * k + 1.0 + nu - t) * pair.cur - (k + nu) * pair.prev) / (k + 1.0);
    pair.prev = pair.cur;
    pair.cur = next;
    pair.rebalance();
    visit(k + 1, pair.current());
  }
}

}  // namespace

ScaledValue laguerre(int n, double nu, double t) {
  ScaledValue last;
  walk_laguerre(n, nu, t, [&](int, const ScaledValue& v) { last = v; });
  return last;
}

std::vector<ScaledValue> laguerre_sequence(int n_max, double nu, double t) {
  std::vector<ScaledValue> out;
  out.reserve(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
  walk_laguerre(n_max, nu, t, [&](int, const ScaledValue& v) { out.push_back(v); });
  return out;
}

double laguerre_fejer_scaled(int n, double nu, double t) {
  if (!(t > 0.0)) throw DomainError("laguerre_fejer_scaled: requires t > 0");
  const ScaledValue weight = ScaledValue::exp((0.5 * nu + 0.25) * std::log(t) - 0.5 * t);
  return (laguerre(n, nu, t) * weight).to_double();
}

double laguerre_fejer_leading(int n, double nu, double t) {
  if (n < 1 || !(t > 0.0)) throw DomainError("laguerre_fejer_leading: requires n >= 1 and t > 0");
  const double amplitude = std::pow(static_cast<double>(n), 0.5 * nu - 0.25) / std::sqrt(std::numbers::pi);
  return amplitude * std::cos(2.0 * std::sqrt(n * t) - nu * std::numbers::pi / 2.0 - std::numbers::pi / 4.0);
}

}  // namespace frl

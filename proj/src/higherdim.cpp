#include "frl/higherdim.hpp"

#include <cmath>
#include <numbers>

#include "frl/errors.hpp"
#include "frl/parallel.hpp"
#include "frl/specfun.hpp"

namespace frl {

namespace {

constexpr double kPi = std::numbers::pi;

void require_d(int d, int d_max) {
  if (d < 2 || d > d_max) {
    throw DomainError("dimension d must satisfy 2 <= d <= " + std::to_string(d_max));
  }
}

double log_gamma_half(int d) { return gamma_scaled(0.5 * d + 1.0).log2_abs() * std::numbers::ln2; }

}  // namespace

double bessel_kernel(int d, double t) {
  require_d(d, 120);
  const double nu = 0.5 * d;
  if (t == 0.0) return 1.0;
  const double log_scale = log_gamma_half(d) - nu * std::log(0.5 * t);
  return std::exp(log_scale) * bessel_j(BesselOrder(nu), t);
}

double lambda_d(int d) {
  require_d(d, 120);
  const double j = bessel_first_zero(BesselOrder(0.5 * d + 1.0));
  return -bessel_kernel(d, j);
}

double lambda_d_direct(int d) {
  require_d(d, 120);
  const auto k = [d](double t) { return bessel_kernel(d, t); };
  // j_{d/2} < d/2 + 2 sqrt(d) + 4
  const double step = 0.01;
  const double end = 0.5 * d + 4.0 * std::sqrt(static_cast<double>(d)) + 10.0;
  double best_t = step;
  double best = k(step);
  for (double t = 2.0 * step; t <= end; t += step) {
    const double v = k(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  double lo = best_t - step;
  double hi = best_t + step;
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = k(x1);
  double f2 = k(x2);
  while (hi - lo > 1e-9) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = k(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = k(x2);
    }
  }
  return -std::min(f1, f2);
}

double bound_new(int d) {
  require_d(d, 120);
  return std::exp(2.0 / d * (log_gamma_half(d) - std::log1p(lambda_d(d)))) / kPi;
}

double bound_bck(int d) {
  if (d < 2) throw DomainError("dimension d must be >= 2");
  return std::exp(2.0 / d * (log_gamma_half(d) - std::numbers::ln2)) / kPi;
}

double bound_upper(int d) {
  if (d < 2) throw DomainError("dimension d must be >= 2");
  return (d + 2.0) / (2.0 * kPi);
}

double u_d(int d) {
  if (d < 2) throw DomainError("dimension d must be >= 2");
  const double half = 0.5 * d;
  return std::sqrt(2.0 * kPi) / std::numbers::e * std::exp(1.0 / (6.0 * (d + 2.0))) * std::sqrt(half + 1.0) *
         std::pow(2.0 / std::numbers::e, half);
}

BoundReport bound_report(int d) {
  require_d(d, 120);
  const double lambda = lambda_d(d);
  const double new_bound = std::exp(2.0 / d * (log_gamma_half(d) - std::log1p(lambda))) / kPi;
  return {d, lambda, new_bound, bound_bck(d), bound_upper(d), u_d(d)};
}

std::vector<BoundReport> bound_table(int d_min, int d_max) {
  require_d(d_min, 120);
  require_d(d_max, 120);
  if (d_min > d_max) throw DomainError("bound_table: requires dmin <= dmax");
  std::vector<BoundReport> rows(static_cast<std::size_t>(d_max - d_min + 1));
  parallel_for(rows.size(), [&](std::size_t i) { rows[i] = bound_report(d_min + static_cast<int>(i)); });
  return rows;
}

std::vector<GrowthRow> linear_growth_report(int d_max) {
  std::vector<GrowthRow> rows;
  for (const auto& r : bound_table(2, d_max)) {
    rows.push_back({r.d, r.d / (2.0 * kPi * std::numbers::e), r.bound_new, r.bound_upper});
  }
  return rows;
}

}  // namespace frl

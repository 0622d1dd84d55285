#include <cmath>
#include <numbers>
#include <vector>

#include "frl/errors.hpp"
#include "frl/specfun.hpp"

namespace frl {

namespace {

// series cancellation at the split is about I_0(12) relative, ~1e-12 absolute
constexpr double kSeriesLimit = 12.0;

double series(double nu, double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 500; ++k) {
    term *= -q / ((k + 1.0) * (nu + k + 1.0));
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum) && k + 1 > q) break;
  }
  // (x/2)^nu / Gamma(nu + 1) in log form
  const double log2_prefactor = nu * std::log2(0.5 * x) - gamma_scaled(nu + 1.0).log2_abs();
  return sum * std::exp2(log2_prefactor);
}

// Hankel's large-argument expansion, summed until the terms stop decreasing.
double hankel_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    if (std::fabs(term) > last) break;
    last = std::fabs(term);
    // k = 1: q += a1; k = 2: p -= a2; k = 3: q -= a3; k = 4: p += a4 ...
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (last < 1e-17) break;
  }
  const double chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Miller's backward recurrence from a high order, normalized with the Neumann sum
//   (x/2)^mu = sum_k (mu + 2k) Gamma(mu + k) / k! * J_{mu+2k}(x),  mu in [0, 1).
double miller(double nu, double x) {
  const double base_floor = std::floor(nu);
  const double mu = nu - base_floor;  // fractional part in [0, 1)
  const int target = static_cast<int>(base_floor);  // -1 when nu in [-1/2, 0)
  const double reach = std::max(x, nu);
  const int top = static_cast<int>(std::ceil(reach + 40.0 + 8.0 * std::cbrt(reach)));

  // Neumann weights w_k for even offsets j = 2k.
  const int half = top / 2 + 1;
  std::vector<double> weight(static_cast<std::size_t>(half) + 1);
  weight[0] = gamma(mu + 1.0);
  double ratio = weight[0];  // Gamma(mu + k) / k!, starting at k = 1
  for (int k = 1; k <= half; ++k) {
    if (k > 1) ratio *= (mu + k - 1.0) / k;
    weight[static_cast<std::size_t>(k)] = (mu + 2.0 * k) * ratio;
  }

  double upper = 0.0;  // J_{mu + j + 1}
  double current = 1e-300;  // J_{mu + j}, arbitrary start
  double saved = 0.0;
  double saved_next = 0.0;
  double neumann = 0.0;
  for (int j = top; j >= 0; --j) {
    if (j % 2 == 0) neumann += weight[static_cast<std::size_t>(j / 2)] * current;
    if (j == target) saved = current;
    if (j == 1) saved_next = current;
    if (j == 0) break;
    const double lower = 2.0 * (mu + j) / x * current - upper;
    upper = current;
    current = lower;
    if (std::fabs(current) > 1e250) {
      current *= 1e-250;
      upper *= 1e-250;
      neumann *= 1e-250;
      saved *= 1e-250;
      saved_next *= 1e-250;
    }
  }
  const double scale = std::pow(0.5 * x, mu) / neumann;
  if (target >= 0) return saved * scale;
  // One more downward step reaches order mu - 1 = nu.
  return (2.0 * mu / x * current - saved_next) * scale;
}

}  // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || nu < -0.5) throw DomainError("BesselOrder: requires finite nu >= -1/2");
}

double bessel_j(BesselOrder order, double x) {
  const double nu = order.value();
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("bessel_j: requires finite x >= 0");
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw DomainError("bessel_j: J_nu(0) is unbounded for nu < 0");
  }
  if (x <= kSeriesLimit) return series(nu, x);
  if (x > 1000.0 && x > 2.0 * nu * nu) return hankel_asymptotic(nu, x);
  return miller(nu, x);
}

double bessel_j_derivative(BesselOrder order, double x) {
  const double nu = order.value();
  if (nu >= 0.5) {
    return 0.5 * (bessel_j(BesselOrder(nu - 1.0), x) - bessel_j(BesselOrder(nu + 1.0), x));
  }
  if (nu == 0.0) return -bessel_j(BesselOrder(1.0), x);
  if (x == 0.0) throw DomainError("bessel_j_derivative: unbounded at x = 0 for 0 < nu < 1/2");
  return nu / x * bessel_j(order, x) - bessel_j(BesselOrder(nu + 1.0), x);
}

namespace {

template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double bessel_first_zero(BesselOrder order) {
  const double nu = order.value();
  if (nu < 0.0) throw DomainError("bessel_first_zero: requires nu >= 0");
  const auto j = [&](double x) { return bessel_j(order, x); };
  constexpr double kStep = 0.25;
  double lo = nu + 1.0;
  double flo = j(lo);
  while (lo < nu + 100.0) {
    const double hi = lo + kStep;
    const double fhi = j(hi);
    if (fhi == 0.0) return hi;
    if ((fhi > 0.0) != (flo > 0.0)) return bisect(j, lo, hi, 1e-13);
    lo = hi;
    flo = fhi;
  }
  throw InternalError("bessel_first_zero: no sign change found in [nu, nu + 100]");
}

std::vector<double> bessel_stationary_points(BesselOrder order, int count) {
  const double nu = order.value();
  if (!(nu > 0.0)) throw DomainError("bessel_stationary_points: requires nu > 0");
  if (count < 1) throw DomainError("bessel_stationary_points: requires count >= 1");
  const auto derivative = [&](double x) { return bessel_j_derivative(order, x); };
  constexpr double kStep = 0.25;
  std::vector<double> out;
  double lo = 0.05;
  double flo = derivative(lo);
  while (static_cast<int>(out.size()) < count) {
    const double hi = lo + kStep;
    const double fhi = derivative(hi);
    if (flo != 0.0 && fhi != 0.0 && (fhi > 0.0) != (flo > 0.0)) {
      out.push_back(bisect(derivative, lo, hi, 1e-13));
    }
    lo = hi;
    flo = fhi;
    if (lo > nu + 200.0 + 4.0 * count) throw InternalError("bessel_stationary_points: scan ran away");
  }
  return out;
}

}  // namespace frl

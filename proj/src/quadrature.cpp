#include "frl/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "frl/errors.hpp"
#include "frl/specfun.hpp"

namespace frl {

namespace {

// Kronrod 15-point abscissae (positive half) and weights, with the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double abs_value;
  int depth;
  bool final;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const Integrand& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrod[7] * fc;
  double gauss = kGauss[3] * fc;
  double absolute = kKronrod[7] * std::fabs(fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[static_cast<std::size_t>(i)];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kKronrod[static_cast<std::size_t>(i)] * (f1 + f2);
    absolute += kKronrod[static_cast<std::size_t>(i)] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 1) gauss += kGauss[static_cast<std::size_t>(i / 2)] * (f1 + f2);
  }
  Panel p{a, b, kronrod * half, std::fabs((kronrod - gauss) * half), absolute * std::fabs(half), depth, false};
  if (!std::isfinite(p.value)) throw DomainError("integrate: integrand is not finite on the interval");
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (depth >= 40 || p.error <= 50.0 * eps * p.abs_value) p.final = true;
  return p;
}

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureOptions& options) {
  if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate: requires finite a <= b");
  if (!(options.tol > 0.0)) throw DomainError("integrate: requires tol > 0");
  if (a == b) return {};

  std::vector<Panel> initial;
  int pieces = 1;
  if (options.max_panel_width > 0.0) pieces = static_cast<int>(std::ceil((b - a) / options.max_panel_width));
  pieces = std::max(pieces, 1);
  if (pieces > options.max_panels) throw DomainError("integrate: panel width cap needs too many panels");
  const double width = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == pieces) ? b : a + (i + 1) * width;
    initial.push_back(gauss_kronrod(f, lo, hi, 0));
  }

  std::priority_queue<Panel> open;
  double final_value = 0.0;
  double final_error = 0.0;
  int count = 0;
  for (const auto& p : initial) {
    ++count;
    if (p.final) {
      final_value += p.value;
      final_error += p.error;
    } else {
      open.push(p);
    }
  }

  const auto totals = [&] {
    // sum in left-endpoint order
    std::vector<Panel> all;
    auto copy = open;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = final_value;
    double error = final_error;
    for (const auto& p : all) {
      value += p.value;
      error += p.error;
    }
    return QuadratureResult{value, error, count};
  };

  double open_error = 0.0;
  {
    auto copy = open;
    while (!copy.empty()) {
      open_error += copy.top().error;
      copy.pop();
    }
  }
  while (!open.empty() && open_error + final_error > options.tol) {
    if (count >= options.max_panels) {
      const auto best = totals();
      throw AccuracyError("integrate: panel budget exhausted", best.value, best.error);
    }
    const Panel worst = open.top();
    open.pop();
    open_error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    for (const Panel& child : {gauss_kronrod(f, worst.a, mid, worst.depth + 1),
                               gauss_kronrod(f, mid, worst.b, worst.depth + 1)}) {
      if (child.final || worst.depth + 1 >= options.max_depth) {
        final_value += child.value;
        final_error += child.error;
      } else {
        open.push(child);
        open_error += child.error;
      }
    }
    ++count;
    // periodic re-sum
    if (count % 256 == 0) {
      open_error = 0.0;
      auto copy = open;
      while (!copy.empty()) {
        open_error += copy.top().error;
        copy.pop();
      }
    }
  }
  auto result = totals();
  if (result.error > options.tol) {
    throw AccuracyError("integrate: tolerance not reached at the depth cap", result.value, result.error);
  }
  return result;
}

double integrate(const Integrand& f, double a, double b, double tol) {
  QuadratureOptions options;
  options.tol = tol;
  return integrate_adaptive(f, a, b, options).value;
}

double gaussian_radius(double envelope, double tol) {
  if (!(envelope > 0.0) || !(tol > 0.0)) throw DomainError("gaussian_radius: requires envelope > 0 and tol > 0");
  const double ratio = 10.0 * envelope / tol;
  const double r = ratio > 1.0 ? std::sqrt(2.0 * std::log(ratio) / std::numbers::pi) : 0.0;
  return std::max(6.0, r);
}

namespace {

void require_gaussian(const Integrand& f, const char* who) {
  if (f.decay == DecayClass::Compact) {
    throw DomainError(std::string(who) + ": integrand must be declared gaussian-tail");
  }
}

}  // namespace

double integrate_half_line(const Integrand& f, double tol) {
  require_gaussian(f, "integrate_half_line");
  const double radius = gaussian_radius(f.envelope, tol);
  QuadratureOptions options;
  options.tol = tol;
  options.max_panel_width = 0.5;
  return integrate_adaptive(f, 0.0, radius, options).value;
}

double integrate_line(const Integrand& f, double tol) {
  require_gaussian(f, "integrate_line");
  const double radius = gaussian_radius(f.envelope, tol);
  QuadratureOptions options;
  options.tol = tol;
  options.max_panel_width = 0.5;
  return integrate_adaptive(f, -radius, radius, options).value;
}

double fourier_even(const Integrand& f, double y, double tol) {
  require_gaussian(f, "fourier_even");
  if (!std::isfinite(y)) throw DomainError("fourier_even: y must be finite");
  const double radius = gaussian_radius(f.envelope, tol);
  QuadratureOptions options;
  options.tol = 0.5 * tol;
  options.max_panel_width = y == 0.0 ? 0.5 : std::min(0.5, 0.25 / std::fabs(y));
  const double w = 2.0 * std::numbers::pi * y;
  const Integrand g{[&](double x) { return f(x) * std::cos(w * x); }, DecayClass::OscillatoryGaussian, f.envelope};
  return 2.0 * integrate_adaptive(g, 0.0, radius, options).value;
}

double radial_fourier(const Integrand& profile, double s, int d, double tol) {
  require_gaussian(profile, "radial_fourier");
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("radial_fourier: requires s > 0");
  if (d < 2) throw DomainError("radial_fourier: requires d >= 2");
  const double nu = 0.5 * d - 1.0;
  const BesselOrder order(nu);
  // allowance for the r^{nu+1} factor
  const double radius = gaussian_radius(profile.envelope, tol) + 0.5 * d;
  QuadratureOptions options;
  const double scale = 2.0 * std::numbers::pi * std::pow(s, -nu);
  options.tol = tol / scale;
  options.max_panel_width = std::min(0.5, 0.25 / s);
  const double w = 2.0 * std::numbers::pi * s;
  const Integrand g{
      [&](double r) { return r == 0.0 ? 0.0 : std::pow(r, nu + 1.0) * profile(r) * bessel_j(order, w * r); },
      DecayClass::OscillatoryGaussian, profile.envelope};
  return scale * integrate_adaptive(g, 0.0, radius, options).value;
}

}  // namespace frl

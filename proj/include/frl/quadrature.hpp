#pragma once

#include <functional>

namespace frl {

enum class DecayClass { Compact, GaussianTail, OscillatoryGaussian };

// A real function of one variable with a declared decay class. For the Gaussian classes
// `envelope` is a constant C with |f(x)| <= C e^{-pi x^2 / 2}.
struct Integrand {
  std::function<double(double)> fn;
  DecayClass decay = DecayClass::Compact;
  double envelope = 1.0;

  double operator()(double x) const { return fn(x); }
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

struct QuadratureOptions {
  double tol = 1e-10;
  double max_panel_width = 0.0;  // 0: no cap
  int max_panels = 100000;
  int max_depth = 40;
};

// Global adaptive Gauss-Kronrod (7/15) integration on [a, b].
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, const QuadratureOptions& options);

// Integral over [a, b]; throws AccuracyError when refinement stalls.
double integrate(const Integrand& f, double a, double b, double tol);

// Integral over the whole line of a Gaussian-tail integrand, truncated at gaussian_radius().
double integrate_line(const Integrand& f, double tol);

// Integral over [0, inf) of a Gaussian-tail integrand.
double integrate_half_line(const Integrand& f, double tol);

// Smallest R >= 6 with C e^{-pi R^2 / 2} below tol / 10.
double gaussian_radius(double envelope, double tol);

// int_R f(x) cos(2 pi x y) dx for even f.
double fourier_even(const Integrand& f, double y, double tol);

// Fourier transform at |xi| = s of the radial function f(|x|) on R^d.
double radial_fourier(const Integrand& profile, double s, int d, double tol);

}  // namespace frl

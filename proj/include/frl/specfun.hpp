#pragma once

#include <vector>

#include "frl/scaled_value.hpp"

namespace frl {

// Gamma

// x > 0; relative error below 1e-12 up to x = 170. RangeError past the double range.
double gamma(double x);

// any finite x > 0
ScaledValue gamma_scaled(double x);

// Hermite (physicists' convention, H_{k+1} = 2x H_k - 2k H_{k-1})

// e^{-x^2/2} H_n(x), any degree
ScaledValue hermite_weighted(int n, double x);

// e^{-x^2/2} H_k(x) for k = 0..n_max, from one pass of the recurrence.
std::vector<ScaledValue> hermite_weighted_sequence(int n_max, double x);

// Raw H_n(x) in double; small degrees only.
double hermite(int n, double x);

// psi_n(x) = 2^{1/4} (2^n n!)^{-1/2} H_n(sqrt(2 pi) x) e^{-pi x^2}, Fourier eigenvalue (-i)^n
double psi(int n, double x);

enum class AsymptoticOrder { Leading, Corrected };

// Large-n approximation to Gamma(n/2+1)/Gamma(n+1) e^{-x^2/2} H_n(x):
//   cos(sqrt(2n+1) x - n pi/2)                                   (Leading)
//   ... + x^3 / (6 sqrt(2n+1)) sin(sqrt(2n+1) x - n pi/2)         (Corrected)
double hermite_asymptotic(int n, double x, AsymptoticOrder order);

// the exact quantity hermite_asymptotic approximates
double hermite_normalized(int n, double x);

// Laguerre

// L_n^nu(t), nu > -1
ScaledValue laguerre(int n, double nu, double t);

// L_k^nu(t) for k = 0..n_max.
std::vector<ScaledValue> laguerre_sequence(int n_max, double nu, double t);

// Left side of Fejer's formula: t^{nu/2+1/4} e^{-t/2} L_n^nu(t).
double laguerre_fejer_scaled(int n, double nu, double t);

// Main term of Fejer's formula: pi^{-1/2} n^{nu/2-1/4} cos(2 sqrt(n t) - nu pi/2 - pi/4).
double laguerre_fejer_leading(int n, double nu, double t);

// Bessel functions of the first kind

// Order of a Bessel function; finite and >= -1/2.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  double value() const { return nu_; }

 private:
  double nu_;
};

// J_nu(x) for x >= 0. Absolute error below 1e-10 for nu <= 60 and x <= 200.
double bessel_j(BesselOrder order, double x);

// J'_nu(x) from the recurrence J_{nu-1} - J_{nu+1} = 2 J'_nu (for nu >= 1/2) or
// J'_nu = (nu/x) J_nu - J_{nu+1} (for smaller orders).
double bessel_j_derivative(BesselOrder order, double x);

// Smallest positive zero j_nu of J_nu, nu >= 0.
double bessel_first_zero(BesselOrder order);

// The first `count` positive zeros of J'_nu (nu > 0) in increasing order.
std::vector<double> bessel_stationary_points(BesselOrder order, int count);

}  // namespace frl

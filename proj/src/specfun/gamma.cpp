#include <array>
#include <cmath>
#include <numbers>

#include "frl/errors.hpp"
#include "frl/specfun.hpp"

namespace frl {

namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void check_argument(double x) {
  if (!std::isfinite(x) || x <= 0.0) throw DomainError("gamma: argument must be finite and > 0");
}

// Gamma(z + 1) for z >= -1/2.
ScaledValue lanczos(double z) {
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  const ScaledValue power = ScaledValue::exp((z + 0.5) * std::log(t) - t);
  return power * ScaledValue(std::sqrt(2.0 * std::numbers::pi) * series);
}

}  // namespace

ScaledValue gamma_scaled(double x) {
  check_argument(x);
  if (x == std::floor(x) && x <= 171.0) {
    return factorial_scaled(static_cast<int>(x) - 1);
  }
  if (x < 0.5) return lanczos(x) / ScaledValue(x);  // Gamma(x) = Gamma(x + 1) / x
  return lanczos(x - 1.0);
}

double gamma(double x) {
  const double value = gamma_scaled(x).to_double();
  if (std::isinf(value)) throw RangeError("gamma: result overflows a double; use gamma_scaled");
  return value;
}

}  // namespace frl

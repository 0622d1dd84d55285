#include "frl/scaled_value.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "frl/errors.hpp"

namespace frl {

namespace {

// Beyond this exponent gap the smaller addend cannot affect a 53-bit mantissa.
constexpr std::int64_t kNegligibleGap = 64;

}  // namespace

ScaledValue::ScaledValue(double value) {
  if (!std::isfinite(value)) throw DomainError("ScaledValue: non-finite value");
  *this = from_parts(value, 0);
}

ScaledValue ScaledValue::from_parts(double mantissa, std::int64_t exponent) {
  if (!std::isfinite(mantissa)) throw DomainError("ScaledValue: non-finite mantissa");
  ScaledValue out;
  if (mantissa == 0.0) return out;
  int k = 0;
  const double fraction = std::frexp(mantissa, &k);  // |fraction| in [0.5, 1)
  out.mantissa_ = 2.0 * fraction;
  out.exponent_ = exponent + k - 1;
  return out;
}

ScaledValue ScaledValue::exp2(double log2_value) {
  if (!std::isfinite(log2_value)) throw DomainError("ScaledValue::exp2: non-finite exponent");
  const double whole = std::floor(log2_value);
  return from_parts(std::exp2(log2_value - whole), static_cast<std::int64_t>(whole));
}

ScaledValue ScaledValue::exp(double value) {
  if (!std::isfinite(value)) throw DomainError("ScaledValue::exp: non-finite argument");
  // e^v = 2^k * e^(v - k ln2); the reduced argument lies in [0, ln2).
  const double k = std::floor(value / std::numbers::ln2);
  const double reduced = value - k * std::numbers::ln2;
  return from_parts(std::exp(reduced), static_cast<std::int64_t>(k));
}

double ScaledValue::to_double() const {
  if (mantissa_ == 0.0) return 0.0;
  if (exponent_ > std::numeric_limits<double>::max_exponent) {
    return mantissa_ > 0 ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
  }
  if (exponent_ < std::numeric_limits<double>::min_exponent - 60) return 0.0 * mantissa_;
  return std::ldexp(mantissa_, static_cast<int>(exponent_));
}

double ScaledValue::log2_abs() const {
  if (mantissa_ == 0.0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(exponent_) + std::log2(std::fabs(mantissa_));
}

ScaledValue ScaledValue::abs() const {
  ScaledValue out = *this;
  out.mantissa_ = std::fabs(mantissa_);
  return out;
}

ScaledValue ScaledValue::sqrt() const {
  if (mantissa_ < 0.0) throw DomainError("ScaledValue::sqrt: negative value");
  if (mantissa_ == 0.0) return {};
  // Make the exponent even so it halves exactly.
  double m = mantissa_;
  std::int64_t e = exponent_;
  if (e % 2 != 0) {
    m *= 2.0;
    e -= 1;
  }
  return from_parts(std::sqrt(m), e / 2);
}

ScaledValue ScaledValue::pow(double power) const {
  if (mantissa_ <= 0.0) throw DomainError("ScaledValue::pow: requires a positive base");
  return exp2(power * log2_abs());
}

ScaledValue ScaledValue::operator-() const {
  ScaledValue out = *this;
  out.mantissa_ = -mantissa_;
  return out;
}

ScaledValue& ScaledValue::operator+=(const ScaledValue& rhs) {
  if (rhs.mantissa_ == 0.0) return *this;
  if (mantissa_ == 0.0) return *this = rhs;
  const std::int64_t gap = exponent_ - rhs.exponent_;
  if (gap > kNegligibleGap) return *this;
  if (gap < -kNegligibleGap) return *this = rhs;
  if (gap >= 0) {
    *this = from_parts(mantissa_ + std::ldexp(rhs.mantissa_, static_cast<int>(-gap)), exponent_);
  } else {
    *this = from_parts(std::ldexp(mantissa_, static_cast<int>(gap)) + rhs.mantissa_, rhs.exponent_);
  }
  return *this;
}

ScaledValue& ScaledValue::operator-=(const ScaledValue& rhs) { return *this += -rhs; }

ScaledValue& ScaledValue::operator*=(const ScaledValue& rhs) {
  if (mantissa_ == 0.0 || rhs.mantissa_ == 0.0) return *this = ScaledValue{};
  return *this = from_parts(mantissa_ * rhs.mantissa_, exponent_ + rhs.exponent_);
}

ScaledValue& ScaledValue::operator/=(const ScaledValue& rhs) {
  if (rhs.mantissa_ == 0.0) throw DomainError("ScaledValue: division by zero");
  if (mantissa_ == 0.0) return *this;
  return *this = from_parts(mantissa_ / rhs.mantissa_, exponent_ - rhs.exponent_);
}

std::partial_ordering operator<=>(const ScaledValue& lhs, const ScaledValue& rhs) {
  const int ls = lhs.sign();
  const int rs = rhs.sign();
  if (ls != rs) return ls <=> rs;
  if (ls == 0) return std::partial_ordering::equivalent;
  // Same nonzero sign: compare magnitudes, flipping for negatives.
  std::partial_ordering magnitude = lhs.exponent_ <=> rhs.exponent_;
  if (magnitude == 0) magnitude = std::fabs(lhs.mantissa_) <=> std::fabs(rhs.mantissa_);
  if (ls > 0) return magnitude;
  if (magnitude == std::partial_ordering::less) return std::partial_ordering::greater;
  if (magnitude == std::partial_ordering::greater) return std::partial_ordering::less;
  return magnitude;
}

double ScaledValue::relative_difference(const ScaledValue& a, const ScaledValue& b) {
  const ScaledValue scale = (a.abs() < b.abs()) ? b.abs() : a.abs();
  if (scale.is_zero()) return 0.0;
  return ((a - b).abs() / scale).to_double();
}

std::string ScaledValue::to_string() const {
  if (mantissa_ == 0.0) return "0";
  // decimal rendering via log10
  const double log10_abs = log2_abs() * std::numbers::ln2 / std::numbers::ln10;
  const double decade = std::floor(log10_abs);
  const double lead = std::pow(10.0, log10_abs - decade) * (mantissa_ < 0 ? -1.0 : 1.0);
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15ge%+lld", lead, static_cast<long long>(decade));
  return buffer;
}

ScaledValue factorial_scaled(int n) {
  if (n < 0) throw DomainError("factorial_scaled: negative argument");
  ScaledValue out(1.0);
  for (int k = 2; k <= n; ++k) out *= ScaledValue(static_cast<double>(k));
  return out;
}

}  // namespace frl

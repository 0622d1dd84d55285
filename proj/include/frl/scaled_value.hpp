#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace frl {

// mantissa * 2^exponent, |mantissa| in [1, 2) or exactly zero
class ScaledValue {
 public:
  constexpr ScaledValue() = default;

  // Exact conversion from a finite double. Throws DomainError for NaN/inf.
  explicit ScaledValue(double value);

  // Normalizes an arbitrary finite mantissa/exponent pair.
  static ScaledValue from_parts(double mantissa, std::int64_t exponent);

  // 2^log2_value for any finite real exponent.
  static ScaledValue exp2(double log2_value);

  static ScaledValue exp(double value);

  double mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == 0.0; }
  int sign() const { return (mantissa_ > 0.0) - (mantissa_ < 0.0); }

  // Nearest double; +-inf on overflow and (possibly subnormal) rounding toward zero on underflow.
  double to_double() const;

  // log2|x|; -inf for zero.
  double log2_abs() const;

  ScaledValue abs() const;
  ScaledValue sqrt() const;
  ScaledValue pow(double power) const;

  ScaledValue operator-() const;
  ScaledValue& operator+=(const ScaledValue& rhs);
  ScaledValue& operator-=(const ScaledValue& rhs);
  ScaledValue& operator*=(const ScaledValue& rhs);
  ScaledValue& operator/=(const ScaledValue& rhs);

  friend ScaledValue operator+(ScaledValue lhs, const ScaledValue& rhs) { return lhs += rhs; }
  friend ScaledValue operator-(ScaledValue lhs, const ScaledValue& rhs) { return lhs -= rhs; }
  friend ScaledValue operator*(ScaledValue lhs, const ScaledValue& rhs) { return lhs *= rhs; }
  friend ScaledValue operator/(ScaledValue lhs, const ScaledValue& rhs) { return lhs /= rhs; }

  friend bool operator==(const ScaledValue& lhs, const ScaledValue& rhs) {
    return lhs.mantissa_ == rhs.mantissa_ && lhs.exponent_ == rhs.exponent_;
  }
  friend std::partial_ordering operator<=>(const ScaledValue& lhs, const ScaledValue& rhs);

  // Relative difference |a-b| / max(|a|,|b|), computed without leaving the scaled domain.
  static double relative_difference(const ScaledValue& a, const ScaledValue& b);

  std::string to_string() const;

 private:
  double mantissa_ = 0.0;
  std::int64_t exponent_ = 0;
};

// n! as a ScaledValue (exact product, one rounding per factor).
ScaledValue factorial_scaled(int n);

}  // namespace frl

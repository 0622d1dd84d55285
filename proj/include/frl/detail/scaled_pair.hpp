#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "frl/scaled_value.hpp"

namespace frl::detail {

// Two consecutive terms of a three-term recurrence sharing one binary exponent.
// rebalance() keeps the larger magnitude within [2^-256, 2^256] and reports the shift so
// callers can rescale any accumulator expressed in the same frame.
struct ScaledPair {
  double prev = 0.0;
  double cur = 0.0;
  std::int64_t exponent = 0;

  int rebalance() {
    const double magnitude = std::max(std::fabs(prev), std::fabs(cur));
    if (magnitude == 0.0 || (magnitude < 0x1p256 && magnitude > 0x1p-256)) return 0;
    const int shift = std::ilogb(magnitude);
    prev = std::ldexp(prev, -shift);
    cur = std::ldexp(cur, -shift);
    exponent += shift;
    return shift;
  }

  ScaledValue current() const { return ScaledValue::from_parts(cur, exponent); }
  ScaledValue previous() const { return ScaledValue::from_parts(prev, exponent); }
};

}  // namespace frl::detail

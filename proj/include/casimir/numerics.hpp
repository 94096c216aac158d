#pragma once

#include <cmath>

namespace casimir::numerics {

// ln(sinh(x)) for x > 0 without overflowing sinh.  For large x,
// ln sinh x = x + ln(1 - e^{-2x}) - ln 2; the direct form is used where sinh
// is comfortably representable.
inline double log_sinh(double x) {
  if (x > 30.0) {
    return x + std::log1p(-std::exp(-2.0 * x)) - M_LN2;
  }
  return std::log(std::sinh(x));
}

// |a/b - 1| with the b == 0 case collapsing to |a|.
inline double relative_error(double computed, double reference) {
  if (reference == 0.0) {
    return std::abs(computed);
  }
  return std::abs(computed / reference - 1.0);
}

}  // namespace casimir::numerics

#pragma once

#include <string>

namespace nuk {

// Value on the extended real line [-inf, +inf].  The order-p monotones
// hit both infinities on states with zero components, so infinities are
// first-class values here, not error states.
struct ExtReal {
  enum Kind { finite, plus_inf, minus_inf };
  Kind kind = finite;
  double v = 0.0;

  static ExtReal of(double x) { return ExtReal{finite, x}; }
  static ExtReal inf() { return ExtReal{plus_inf, 0.0}; }
  static ExtReal ninf() { return ExtReal{minus_inf, 0.0}; }

  bool is_finite() const { return kind == finite; }
  bool is_inf() const { return kind == plus_inf; }
  bool is_ninf() const { return kind == minus_inf; }

  // +-HUGE_VAL on the infinities.
  double as_double() const;
};

// Subtraction with the conventions needed for monotone gaps:
// inf - finite = inf, finite - inf = -inf, etc.  inf - inf and
// (-inf) - (-inf) are indeterminate and throw.
ExtReal operator-(const ExtReal& a, const ExtReal& b);
ExtReal operator-(const ExtReal& a);

bool operator==(const ExtReal& a, const ExtReal& b);
bool operator!=(const ExtReal& a, const ExtReal& b);
bool operator<(const ExtReal& a, const ExtReal& b);
bool operator<=(const ExtReal& a, const ExtReal& b);
bool operator>(const ExtReal& a, const ExtReal& b);
bool operator>=(const ExtReal& a, const ExtReal& b);

// "inf", "-inf", or the finite value with the given number of
// significant digits.
std::string to_string(const ExtReal& a, int sig_digits = 9);

}  // namespace nuk

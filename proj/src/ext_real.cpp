#include "nuk/ext_real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nuk {

double ExtReal::as_double() const {
  switch (kind) {
    case plus_inf:
      return HUGE_VAL;
    case minus_inf:
      return -HUGE_VAL;
    default:
      return v;
  }
}

ExtReal operator-(const ExtReal& a, const ExtReal& b) {
  if (a.is_finite() && b.is_finite()) return ExtReal::of(a.v - b.v);
  if (a.is_inf() && !b.is_inf()) return ExtReal::inf();
  if (a.is_ninf() && !b.is_ninf()) return ExtReal::ninf();
  if (a.is_finite() && b.is_inf()) return ExtReal::ninf();
  if (a.is_finite() && b.is_ninf()) return ExtReal::inf();
  throw std::logic_error("indeterminate difference of infinities");
}

ExtReal operator-(const ExtReal& a) {
  if (a.is_inf()) return ExtReal::ninf();
  if (a.is_ninf()) return ExtReal::inf();
  return ExtReal::of(-a.v);
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.kind != b.kind) return false;
  return a.is_finite() ? a.v == b.v : true;
}

bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }

bool operator<(const ExtReal& a, const ExtReal& b) {
  if (a.is_ninf()) return !b.is_ninf();
  if (a.is_inf()) return false;
  if (b.is_inf()) return true;
  if (b.is_ninf()) return false;
  return a.v < b.v;
}

bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

std::string to_string(const ExtReal& a, int sig_digits) {
  if (a.is_inf()) return "inf";
  if (a.is_ninf()) return "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", sig_digits, a.v);
  return buf;
}

}  // namespace nuk

#pragma once

#include <gmpxx.h>

#include <string>

namespace nuk {

// Exact rational arithmetic everywhere the math allows it.  Floats only
// appear at the reporting boundary (logs, report fields, CSV output).
using Rat = mpq_class;
using Int = mpz_class;

// Parses "3/4", "12", "0.325", "2.5e-3" into an exact rational.
// Decimal strings convert exactly (denominator is a power of ten).
// Throws Error(Err::parse) on malformed input.
Rat rat_from_string(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

// Exact: binary doubles are dyadic rationals.
Rat rat_from_double(double v);

// log2 of a positive rational. Correct even when numerator or
// denominator overflows double range.
double log2_rat(const Rat& r);
double log2_int(const Int& n);

// Natural log of a positive rational, same overflow care.
double ln_rat(const Rat& r);

// r^k for integer k (k may be negative; r must be nonzero then).
Rat rat_pow(const Rat& r, long k);

Int int_pow(const Int& b, unsigned long e);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

// GMP's two-argument mpq constructor does not reduce; every fraction
// built from a numerator/denominator pair must go through here.
inline Rat frac(const Int& n, const Int& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}
inline Rat frac(long long n, long long d) {
  return frac(Int(static_cast<long>(n)), Int(static_cast<long>(d)));
}

}  // namespace nuk

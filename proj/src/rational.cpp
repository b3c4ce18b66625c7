#include "nuk/rational.hpp"

#include <cctype>
#include <cmath>

#include "nuk/error.hpp"

namespace nuk {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

long parse_long(const std::string& s, const std::string& whole) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  if (!all_digits(t) || t.size() > 9)
    fail(Err::parse, "malformed exponent in '" + whole + "'");
  long v = std::stol(t);
  return neg ? -v : v;
}

}  // namespace

Rat rat_from_string(const std::string& in) {
  std::string s;
  for (char c : in)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(Err::parse, "empty number");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) fail(Err::parse, "sign without digits in '" + in + "'");

  Rat r;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(Err::parse, "malformed fraction '" + in + "'");
    Int d(den);
    if (d == 0) fail(Err::parse, "zero denominator in '" + in + "'");
    r = Rat(Int(num), d);
    r.canonicalize();
  } else {
    // decimal with optional fractional part and exponent
    std::string mant = s;
    long expo = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
      mant = s.substr(0, e);
      expo = parse_long(s.substr(e + 1), in);
    }
    std::string ip = mant, fp;
    auto dot = mant.find('.');
    if (dot != std::string::npos) {
      ip = mant.substr(0, dot);
      fp = mant.substr(dot + 1);
    }
    if (ip.empty() && fp.empty())
      fail(Err::parse, "no digits in '" + in + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      fail(Err::parse, "malformed number '" + in + "'");
    Int n(ip.empty() ? std::string("0") : ip);
    for (char c : fp) {
      n *= 10;
      n += c - '0';
    }
    r = Rat(n);
    long shift = expo - static_cast<long>(fp.size());
    if (shift != 0) r *= rat_pow(Rat(10), shift);
  }
  if (neg) r = -r;
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

double rat_to_double(const Rat& r) { return r.get_d(); }

Rat rat_from_double(double v) {
  if (!std::isfinite(v)) fail(Err::out_of_domain, "non-finite value");
  Rat r;
  mpq_set_d(r.get_mpq_t(), v);
  return r;
}

double log2_int(const Int& n) {
  if (n <= 0) fail(Err::out_of_domain, "log of non-positive integer");
  long e = 0;
  double m = mpz_get_d_2exp(&e, n.get_mpz_t());
  return std::log2(m) + static_cast<double>(e);
}

double log2_rat(const Rat& r) {
  if (r <= 0) fail(Err::out_of_domain, "log of non-positive rational");
  return log2_int(r.get_num()) - log2_int(r.get_den());
}

double ln_rat(const Rat& r) { return log2_rat(r) * M_LN2; }

Rat rat_pow(const Rat& r, long k) {
  if (k == 0) return Rat(1);
  bool invert = k < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-(k + 1)) + 1ul
                           : static_cast<unsigned long>(k);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), e);
  if (invert) {
    if (num == 0) fail(Err::out_of_domain, "zero to a negative power");
    std::swap(num, den);
    if (den < 0) {
      den = -den;
      num = -num;
    }
  }
  Rat out(num, den);
  out.canonicalize();
  return out;
}

Int int_pow(const Int& b, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

Int rat_floor(const Rat& r) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num().get_mpz_t(),
             r.get_den().get_mpz_t());
  return out;
}

Int rat_ceil(const Rat& r) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num().get_mpz_t(),
             r.get_den().get_mpz_t());
  return out;
}

}  // namespace nuk

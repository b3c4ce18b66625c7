#include "nuk/lorenz.hpp"

#include <algorithm>
#include <set>

#include "nuk/error.hpp"

namespace nuk {

LorenzCurve build_curve(const Distribution& x) {
  Distribution s = sort_descending(x);
  LorenzCurve c;
  c.d = s.dim();
  c.S.resize(c.d + 1);
  c.S[0] = 0;
  for (int k = 1; k <= c.d; ++k) c.S[k] = c.S[k - 1] + s.p[k - 1];
  return c;
}

Rat ky_fan(const Distribution& x, int k) {
  if (k < 0 || k > x.dim())
    fail(Err::out_of_range, "Ky Fan index " + std::to_string(k) +
                                " outside [0, " + std::to_string(x.dim()) +
                                "]");
  return build_curve(x).S[k];
}

Rat eval_curve(const LorenzCurve& c, const Rat& u) {
  if (u < 0 || u > 1)
    fail(Err::out_of_range, "curve abscissa " + rat_to_string(u));
  Rat t = u * c.d;
  Int kz = rat_floor(t);
  long k = kz.get_si();
  if (k == c.d) return c.S[c.d];
  Rat frac = t - Rat(kz);
  return c.S[k] + frac * (c.S[k + 1] - c.S[k]);
}

Rat invert_curve(const LorenzCurve& c, const Rat& h) {
  if (h < 0 || h > 1)
    fail(Err::out_of_range, "curve height " + rat_to_string(h));
  if (h == 0) return Rat(0);
  // smallest k with S[k] >= h; S[k-1] < h <= S[k] and the increment is
  // positive, so the preimage below is the leftmost one
  int k = 1;
  while (c.S[k] < h) ++k;
  return (Rat(k - 1) + (h - c.S[k - 1]) / (c.S[k] - c.S[k - 1])) / c.d;
}

Rat rescaled_histogram(const Distribution& x, const Rat& v) {
  if (v < 0 || v >= 1)
    fail(Err::out_of_domain,
         "histogram abscissa " + rat_to_string(v) + " outside [0, 1)");
  Distribution s = sort_descending(x);
  long idx = rat_floor(v * s.dim()).get_si();
  return Rat(s.dim()) * s.p[idx];
}

bool noisy_equivalent(const Distribution& x, const Distribution& y) {
  LorenzCurve cx = build_curve(x), cy = build_curve(y);
  for (int k = 1; k < cx.d; ++k)
    if (eval_curve(cy, frac(k, cx.d)) != cx.S[k]) return false;
  for (int k = 1; k < cy.d; ++k)
    if (eval_curve(cx, frac(k, cy.d)) != cy.S[k]) return false;
  return true;
}

namespace {

// Shared witness computation: elbow gaps of the pointwise comparison plus
// the maximal horizontal log-shift.  Both reduce to exact rational
// comparisons on the two curves.
WitnessReport witness(const Distribution& x, const Distribution& y) {
  LorenzCurve cx = build_curve(x), cy = build_curve(y);
  WitnessReport r;

  // Pointwise domination holds everywhere iff it holds at the elbows of
  // y: between them L_y is linear while L_x is concave.
  bool have = false;
  int argmin = -1;
  Rat best;
  for (int k = 1; k < cy.d; ++k) {
    Rat gap = eval_curve(cx, frac(k, cy.d)) - cy.S[k];
    if (!have || gap < best) {
      best = gap;
      argmin = k;
      have = true;
    }
  }
  if (!have) best = Rat(0);  // y uniform on one outcome: nothing to check
  r.delta_exact = best;
  r.delta = rat_to_double(best);
  r.go = best >= 0;
  r.failing_k = r.go ? -1 : argmin;

  // 2^lambda = min over elbow heights h of u_y(h) / u_x(h), where u_c(h)
  // is the smallest preimage of h.  The ratio of two increasing
  // piecewise-linear inverses is monotone between elbow heights, so the
  // minimum sits at one of them.
  std::set<Rat> heights;
  for (int k = 1; k <= cx.d; ++k)
    if (cx.S[k] > 0) heights.insert(cx.S[k]);
  for (int k = 1; k <= cy.d; ++k)
    if (cy.S[k] > 0) heights.insert(cy.S[k]);
  bool first = true;
  Rat two;
  for (const Rat& h : heights) {
    Rat ratio = invert_curve(cy, h) / invert_curve(cx, h);
    if (first || ratio < two) {
      two = ratio;
      first = false;
    }
  }
  r.two_to_lambda = two;
  r.lambda = ExtReal::of(log2_rat(two));

  // decision consistency: go iff lambda >= 0, both exact
  if (r.go != (two >= 1))
    fail(Err::not_realizable, "witness internal inconsistency");
  return r;
}

}  // namespace

WitnessReport noisy_majorizes(const Distribution& x, const Distribution& y) {
  return witness(x, y);
}

WitnessReport lambda_witness(const Distribution& x, const Distribution& y) {
  return witness(x, y);
}

// truncate lives here rather than in distribution.cpp because it is pure
// Lorenz-curve surgery: compress the curve of x horizontally by b/a,
// then read off the unique minimal-dimension distribution with the same
// compressed curve.
Distribution truncate(const Distribution& x, long long a, long long b) {
  if (a < 1 || b < 1)
    fail(Err::out_of_domain, "truncation ratio must be positive");
  if (a < b)
    fail(Err::out_of_domain, "negative truncation amount");
  Distribution s = sort_descending(x);
  int d = s.dim();
  int supp = support_size(s);
  // the curve of x must already be flat at 1 beyond the cut point
  Rat cut = frac(b, a);
  if (frac(supp, d) > cut)
    fail(Err::too_much_truncation,
         "removing log2(" + std::to_string(a) + "/" + std::to_string(b) +
             ") exceeds the flat part of the curve");

  // interior elbows of G(v) = L_x(v * b/a): slope changes of L_x at
  // u = k/d with u < b/a, mapped to v = u * a/b
  std::set<Rat> elbows;
  for (int k = 1; k < d; ++k) {
    if (s.p[k - 1] == s.p[k]) continue;
    Rat u = frac(k, d);
    if (u >= cut) continue;
    elbows.insert(u / cut);
  }

  Int dp(1);
  for (const Rat& v : elbows) {
    Int den = v.get_den();
    mpz_lcm(dp.get_mpz_t(), dp.get_mpz_t(), den.get_mpz_t());
  }
  if (!dp.fits_slong_p() || dp.get_si() > (1 << 20))
    fail(Err::budget_exceeded,
         "truncated distribution needs " + dp.get_str() + " outcomes");
  long dd = dp.get_si();

  LorenzCurve cx = build_curve(s);
  std::vector<Rat> out;
  out.reserve(dd);
  Rat prev(0);
  for (long i = 1; i <= dd; ++i) {
    Rat g = eval_curve(cx, frac(i, dd) * cut);
    out.push_back(g - prev);
    prev = g;
  }
  for (long i = 1; i < dd; ++i)
    if (out[i - 1] < out[i])
      fail(Err::not_realizable, "compressed curve lost concavity");
  return make_distribution(std::move(out));
}

}  // namespace nuk

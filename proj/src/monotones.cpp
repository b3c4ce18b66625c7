#include "nuk/monotones.hpp"

#include <algorithm>
#include <cmath>

#include "nuk/error.hpp"
#include "nuk/lorenz.hpp"

namespace nuk {

namespace {

// Doubles can overflow to infinity on extreme orders (p far from 0 with
// tiny components); route those into the proper ExtReal kind instead of
// leaking an infinite "finite" value.
ExtReal finite_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? ExtReal::inf() : ExtReal::ninf();
  return ExtReal::of(v);
}

double sum_pow(const Distribution& x, double p) {
  double s = 0.0;
  for (const Rat& c : x.p)
    if (c > 0) s += std::pow(rat_to_double(c), p);
  return s;
}

// log2(sum over supp of x_i^p) with the dominant term factored out, so
// extreme orders (|p| ~ 1e6 from the catalysis refinement) neither
// underflow nor overflow: every summand lies in (0, 1] and the dominant
// one is exactly 1.  Callers guarantee full support when p < 0.
double log2_sum_pow(const Distribution& x, double p) {
  double dom = 0.0;
  bool have = false;
  for (const Rat& c : x.p) {
    if (c == 0) continue;
    double lc = log2_rat(c);
    if (!have || (p > 0 ? lc > dom : lc < dom)) {
      dom = lc;
      have = true;
    }
  }
  double s = 0.0;
  for (const Rat& c : x.p) {
    if (c == 0) continue;
    s += std::exp2(p * (log2_rat(c) - dom));
  }
  return p * dom + std::log2(s);
}

Rat max_component(const Distribution& x) {
  return *std::max_element(x.p.begin(), x.p.end());
}

Rat min_component(const Distribution& x) {
  return *std::min_element(x.p.begin(), x.p.end());
}

Rat product_of_components(const Distribution& x) {
  Rat prod(1);
  for (const Rat& c : x.p) prod *= c;
  return prod;
}

}  // namespace

double shannon_entropy(const Distribution& x) {
  double h = 0.0;
  for (const Rat& c : x.p) {
    if (c == 0) continue;  // 0 log 0 = 0
    double v = rat_to_double(c);
    h -= v * std::log2(v);
  }
  return h;
}

double shannon_nonuniformity(const Distribution& x) {
  return std::log2(static_cast<double>(x.dim())) - shannon_entropy(x);
}

ExtReal renyi_nonuniformity(const Distribution& x, const ExtReal& p) {
  int d = x.dim();
  if (p.is_inf()) return ExtReal::of(log2_rat(Rat(d) * max_component(x)));
  if (p.is_ninf()) {
    Rat mn = min_component(x);
    if (mn == 0) return ExtReal::inf();
    return ExtReal::of(-log2_rat(Rat(d) * mn));
  }
  double pv = p.v;
  if (pv == 0.0) return ExtReal::of(log2_rat(frac(d, support_size(x))));
  if (pv == 1.0) return ExtReal::of(shannon_nonuniformity(x));
  if (pv < 0.0 && !has_full_support(x)) return ExtReal::inf();
  // I_p = sgn(p) * (log d + log(sum x_i^p) / (p-1))
  double sgn = pv > 0 ? 1.0 : -1.0;
  double val = sgn * (std::log2(static_cast<double>(d)) +
                      log2_sum_pow(x, pv) / (pv - 1.0));
  return finite_or_inf(val);
}

ExtReal tsallis_nonuniformity(const Distribution& x, double p) {
  int d = x.dim();
  if (p == 0.0) return ExtReal::of(0.0);  // sgn(0) = 0 kills the order-0 case
  if (p == 1.0) {
    // limit of the family: sum x_i ln(d x_i), natural log
    double s = 0.0;
    for (const Rat& c : x.p) {
      if (c == 0) continue;
      double v = rat_to_double(c);
      s += v * std::log(v * d);
    }
    return ExtReal::of(s);
  }
  if (p < 0.0 && !has_full_support(x)) return ExtReal::inf();
  double sgn = p > 0 ? 1.0 : -1.0;
  double scale = std::pow(static_cast<double>(d), p - 1.0);
  double val = sgn / (p - 1.0) * (scale * sum_pow(x, p) - 1.0);
  return finite_or_inf(val);
}

ExtReal burg_nonuniformity(const Distribution& x) {
  if (!has_full_support(x)) return ExtReal::inf();
  int d = x.dim();
  // relative entropy from the uniform state to x:
  // -log d - (1/d) sum log x_i, with the sum taken exactly first
  return ExtReal::of(-std::log2(static_cast<double>(d)) -
                     log2_rat(product_of_components(x)) / d);
}

Rat gini_exact(const Distribution& x) {
  Distribution s = sort_descending(x);
  int d = s.dim();
  Rat acc(0);
  for (int i = 2; i <= d; ++i) acc += Rat(i - 1) * s.p[i - 1];
  return frac(d - 1, 2LL * d) - acc / d;
}

Rat schutz_exact(const Distribution& x) {
  LorenzCurve c = build_curve(x);
  Rat best(0);  // k = 0 gives 0
  for (int k = 1; k <= c.d; ++k) {
    Rat v = c.S[k] - frac(k, c.d);
    if (v > best) best = v;
  }
  return best;
}

double gini(const Distribution& x) { return rat_to_double(gini_exact(x)); }

double schutz(const Distribution& x) { return rat_to_double(schutz_exact(x)); }

double amato(const Distribution& x) {
  int d = x.dim();
  double s = 0.0;
  for (const Rat& c : x.p) s += std::hypot(1.0 / d, rat_to_double(c));
  return s;
}

double geometric_nonuniformity(const Distribution& x) {
  if (!has_full_support(x)) return 1.0;  // geometric mean collapses to 0
  int d = x.dim();
  return 1.0 - d * std::exp2(log2_rat(product_of_components(x)) / d);
}

Rat lorenz_height_monotone(const Distribution& x, const Rat& u) {
  return eval_curve(build_curve(x), u);
}

ExtReal relative_entropy(const Distribution& x, const Distribution& q,
                         const ExtReal& p) {
  if (x.dim() != q.dim())
    fail(Err::dimension_mismatch, "relative entropy needs equal dimensions");
  int d = x.dim();

  if (p.is_inf()) {
    bool have = false;
    Rat best;
    for (int i = 0; i < d; ++i) {
      if (x.p[i] == 0) continue;
      if (q.p[i] == 0) return ExtReal::inf();
      Rat r = x.p[i] / q.p[i];
      if (!have || r > best) {
        best = r;
        have = true;
      }
    }
    return ExtReal::of(log2_rat(best));
  }
  if (p.is_ninf()) {
    bool have = false;
    Rat best;
    for (int i = 0; i < d; ++i) {
      if (q.p[i] == 0) continue;
      Rat r = x.p[i] / q.p[i];
      if (!have || r < best) {
        best = r;
        have = true;
      }
    }
    if (best == 0) return ExtReal::inf();
    return ExtReal::of(-log2_rat(best));
  }

  double pv = p.v;
  if (pv == 1.0) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
      if (x.p[i] == 0) continue;
      if (q.p[i] == 0) return ExtReal::inf();
      s += rat_to_double(x.p[i]) * log2_rat(x.p[i] / q.p[i]);
    }
    return ExtReal::of(s);
  }
  if (pv == 0.0) {
    Rat qs(0);
    for (int i = 0; i < d; ++i)
      if (x.p[i] > 0) qs += q.p[i];
    if (qs == 0) return ExtReal::inf();
    return ExtReal::of(-log2_rat(qs));
  }

  double sgn = pv > 0 ? 1.0 : -1.0;
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    if (pv > 1.0) {
      if (x.p[i] == 0) continue;
      if (q.p[i] == 0) return ExtReal::inf();
    } else if (pv > 0.0) {
      if (x.p[i] == 0 || q.p[i] == 0) continue;
    } else {
      if (q.p[i] == 0) continue;       // q^{1-p} factor vanishes first
      if (x.p[i] == 0) return ExtReal::inf();  // x^p blows up
    }
    sum += std::pow(rat_to_double(x.p[i]), pv) *
           std::pow(rat_to_double(q.p[i]), 1.0 - pv);
  }
  if (sum == 0.0) return ExtReal::inf();  // disjoint supports, 0 < p < 1
  if (std::isinf(sum)) return ExtReal::inf();
  return finite_or_inf(sgn / (pv - 1.0) * std::log2(sum));
}

ExtReal klimesh_f(const Distribution& x, double r) {
  const double ln2 = std::log(2.0);
  if (r > 1.0) return finite_or_inf(ln2 * log2_sum_pow(x, r));
  if (r == 1.0) {
    double s = 0.0;
    for (const Rat& c : x.p) {
      if (c == 0) continue;
      double v = rat_to_double(c);
      s += v * std::log(v);
    }
    return ExtReal::of(s);
  }
  if (r > 0.0) return finite_or_inf(-ln2 * log2_sum_pow(x, r));
  if (!has_full_support(x)) return ExtReal::inf();
  if (r == 0.0) return ExtReal::of(-ln_rat(product_of_components(x)));
  return finite_or_inf(ln2 * log2_sum_pow(x, r));
}

}  // namespace nuk

#include "nuk/smoothing.hpp"

#include <algorithm>
#include <cmath>

#include "nuk/error.hpp"
#include "nuk/lorenz.hpp"
#include "nuk/monotones.hpp"

namespace nuk {

namespace {

void check_eps(double eps) {
  if (!(eps >= 0.0) || eps >= 1.0)
    fail(Err::out_of_domain, "smoothing radius must lie in [0, 1)");
}

void check_metric(Metric m) {
  if (m != Metric::trace)
    fail(Err::unsupported_metric,
         "only trace-distance smoothing has a closed form; the purified "
         "metric is not supported here");
}

// n! as an exact integer
Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

double distance(const Distribution& x, const Distribution& y, Metric m) {
  if (x.dim() != y.dim())
    fail(Err::dimension_mismatch, "distance needs equal dimensions");
  if (m == Metric::trace) {
    Rat acc(0);
    for (int i = 0; i < x.dim(); ++i) acc += abs(x.p[i] - y.p[i]);
    return rat_to_double(acc) / 2.0;
  }
  double f = 0.0;
  for (int i = 0; i < x.dim(); ++i)
    f += std::sqrt(rat_to_double(x.p[i]) * rat_to_double(y.p[i]));
  double v = 1.0 - f * f;
  return v <= 0.0 ? 0.0 : std::sqrt(v);
}

Spectrum spectrum_of(const Distribution& x) {
  Distribution s = sort_descending(x);
  Spectrum sp;
  sp.dim = s.dim();
  for (const Rat& c : s.p) {
    if (c == 0) break;  // sorted: zeros are all at the tail
    if (!sp.levels.empty() && sp.levels.back().first == c)
      sp.levels.back().second += 1;
    else
      sp.levels.emplace_back(c, Int(1));
  }
  return sp;
}

Spectrum spectrum_power(const Distribution& x, int n) {
  if (n < 0) fail(Err::invalid_argument, "negative tensor power");
  Spectrum base = spectrum_of(x);
  int k = static_cast<int>(base.levels.size());
  Spectrum out;
  out.dim = int_pow(Int(x.dim()), static_cast<unsigned long>(n));
  if (n == 0) {
    out.levels.emplace_back(Rat(1), Int(1));
    return out;
  }

  // number of compositions of n into k parts, the enumeration size
  Int combos;
  mpz_bin_uiui(combos.get_mpz_t(), static_cast<unsigned long>(n + k - 1),
               static_cast<unsigned long>(k - 1));
  if (combos > 500000)
    fail(Err::budget_exceeded, "n-copy spectrum would need " +
                                   combos.get_str() + " level groups");

  Int n_fac = factorial(static_cast<unsigned long>(n));
  std::vector<int> part(k, 0);
  std::vector<std::pair<Rat, Int>> raw;

  // enumerate occupation numbers (n_1 .. n_k) summing to n; each group
  // contributes value prod v_i^{n_i} with multiplicity
  // n!/prod n_i! * prod c_i^{n_i}
  auto emit = [&]() {
    Rat value(1);
    Int count = n_fac;
    for (int i = 0; i < k; ++i) {
      if (part[i] == 0) continue;
      value *= rat_pow(base.levels[i].first, part[i]);
      Int div = factorial(static_cast<unsigned long>(part[i]));
      mpz_divexact(count.get_mpz_t(), count.get_mpz_t(), div.get_mpz_t());
      Int cc;
      mpz_pow_ui(cc.get_mpz_t(), base.levels[i].second.get_mpz_t(),
                 static_cast<unsigned long>(part[i]));
      count *= cc;
    }
    raw.emplace_back(std::move(value), std::move(count));
  };
  // odometer over the first k-1 slots; the last absorbs the remainder
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == k - 1) {
      part[idx] = remaining;
      emit();
      return;
    }
    for (int t = 0; t <= remaining; ++t) {
      part[idx] = t;
      self(self, idx + 1, remaining - t);
    }
  };
  rec(rec, 0, n);

  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (auto& lv : raw) {
    if (!out.levels.empty() && out.levels.back().first == lv.first)
      out.levels.back().second += lv.second;
    else
      out.levels.push_back(std::move(lv));
  }
  return out;
}

Int spectrum_h0_count(const Spectrum& s, const Rat& eps) {
  Rat need = 1 - eps;
  Rat cum(0);
  Int cnt(0);
  for (const auto& [v, c] : s.levels) {
    Rat block = v * Rat(c);
    if (cum + block >= need) {
      cnt += rat_ceil((need - cum) / v);
      return cnt;
    }
    cum += block;
    cnt += c;
  }
  fail(Err::not_realizable, "spectrum mass fell short of 1");
}

Rat spectrum_iinf_level(const Spectrum& s, const Rat& eps) {
  Rat uni = frac(Int(1), s.dim);
  Rat excess(0);
  for (const auto& [v, c] : s.levels)
    if (v > uni) excess += (v - uni) * Rat(c);
  if (excess <= eps) return uni;  // the ball reaches the uniform state

  Rat removal(0);
  Int cnt(0);
  for (size_t i = 0; i < s.levels.size(); ++i) {
    cnt += s.levels[i].second;
    Rat v = s.levels[i].first;
    Rat v_next = i + 1 < s.levels.size() ? s.levels[i + 1].first : Rat(0);
    Rat delta = Rat(cnt) * (v - v_next);
    if (removal + delta >= eps) return v - (eps - removal) / Rat(cnt);
    removal += delta;
  }
  fail(Err::not_realizable, "water level search ran off the spectrum");
}

double spectrum_h0_eps(const Spectrum& s, const Rat& eps) {
  return log2_int(spectrum_h0_count(s, eps));
}

double spectrum_i0_eps(const Spectrum& s, const Rat& eps) {
  return log2_rat(frac(s.dim, spectrum_h0_count(s, eps)));
}

double spectrum_iinf_eps(const Spectrum& s, const Rat& eps) {
  return log2_rat(Rat(s.dim) * spectrum_iinf_level(s, eps));
}

double h0_eps(const Distribution& x, double eps, Metric m) {
  check_metric(m);
  check_eps(eps);
  return spectrum_h0_eps(spectrum_of(x), rat_from_double(eps));
}

double iinf_eps(const Distribution& x, double eps, Metric m) {
  check_metric(m);
  check_eps(eps);
  return spectrum_iinf_eps(spectrum_of(x), rat_from_double(eps));
}

double j0_eps(const Distribution& x, double eps, Metric m) {
  check_metric(m);
  check_eps(eps);
  Rat u0 = invert_curve(build_curve(x), 1 - rat_from_double(eps));
  return -log2_rat(u0);
}

double approx_formation(const Distribution& x, double eps) {
  return iinf_eps(x, eps, Metric::trace);
}

DistillReport approx_distill(const Distribution& x, double eps) {
  check_eps(eps);
  Rat er = rat_from_double(eps);
  return DistillReport{spectrum_i0_eps(spectrum_of(x), er),
                       j0_eps(x, eps, Metric::trace)};
}

ConvertCheck approx_convert_check(const Distribution& x,
                                  const Distribution& y, double eps) {
  check_eps(eps);
  Rat er = rat_from_double(eps);
  Spectrum sx = spectrum_of(x), sy = spectrum_of(y);

  Rat i0x = frac(sx.dim, spectrum_h0_count(sx, er / 2));  // 2^{I_0^{e/2}}
  Rat iiy = Rat(sy.dim) * spectrum_iinf_level(sy, er / 2);
  if (i0x >= iiy) return ConvertCheck::sufficient;

  Rat iiy_full = Rat(sy.dim) * spectrum_iinf_level(sy, er);
  Rat iix = Rat(sx.dim) * *std::max_element(x.p.begin(), x.p.end());
  if (iiy_full > iix) return ConvertCheck::necessary_violated;

  return ConvertCheck::undetermined;
}

namespace {

void check_experiment_args(double eps, int n_max) {
  check_eps(eps);
  if (n_max < 1) fail(Err::invalid_argument, "n_max must be at least 1");
}

bool is_uniform(const Distribution& y) {
  for (const Rat& c : y.p)
    if (c != Rat(1, y.dim())) return false;
  return true;
}

}  // namespace

RateExperiment asymptotic_rate_experiment(const Distribution& x,
                                          const Distribution& y, double eps,
                                          int n_max) {
  check_experiment_args(eps, n_max);
  if (is_uniform(y))
    fail(Err::out_of_domain,
         "rate against a uniform target is unbounded (I(y) = 0)");

  RateExperiment e;
  e.epsilon = eps;
  e.n_max = n_max;
  e.kind = RateExperiment::rate;
  e.predicted_rate = shannon_nonuniformity(x) / shannon_nonuniformity(y);

  Rat half = rat_from_double(eps) / 2;
  long long m = 0;
  for (int n = 1; n <= n_max; ++n) {
    Spectrum sx = spectrum_power(x, n);
    Rat lhs = frac(sx.dim, spectrum_h0_count(sx, half));
    // certified-achievable target count: largest m with
    // 2^{I_0^{e/2}(x^n)} >= 2^{I_inf^{e/2}(y^m)}, exact comparison.
    // Both sides are monotone in their copy counts, so m never decreases.
    for (;;) {
      if (m > 100000)
        fail(Err::budget_exceeded, "target copy count exploded");
      Spectrum sy = spectrum_power(y, static_cast<int>(m) + 1);
      Rat rhs = Rat(sy.dim) * spectrum_iinf_level(sy, half);
      if (rhs <= lhs)
        ++m;
      else
        break;
    }
    e.rows.push_back(
        {n, m, static_cast<double>(m) / static_cast<double>(n)});
  }
  return e;
}

RateExperiment asymptotic_cost_experiment(const Distribution& x,
                                          const Distribution& y, double eps,
                                          int n_max) {
  check_experiment_args(eps, n_max);

  double ix = shannon_nonuniformity(x), iy = shannon_nonuniformity(y);
  RateExperiment e;
  e.epsilon = eps;
  e.n_max = n_max;
  e.kind = ix <= iy ? RateExperiment::cost : RateExperiment::yield;
  e.predicted_rate = std::abs(iy - ix);

  // Each stage is budgeted eps/2 of trace distance and certified through
  // the eps/4-smoothed entropies of its endpoints.
  Rat q = rat_from_double(eps) / 4;
  Rat stage_floor = 1 - q;  // 2^{I_inf^{q}} of one sharp bit, per bit

  for (int n = 1; n <= n_max; ++n) {
    Spectrum sx = spectrum_power(x, n);
    Rat i0x = frac(sx.dim, spectrum_h0_count(sx, q));
    // distillation stage: largest k with 2^k (1 - q) <= 2^{I_0^q(x^n)}
    long long k = 0;
    Int two_k(2);
    while (Rat(two_k) * stage_floor <= i0x) {
      ++k;
      two_k *= 2;
    }
    // formation stage: smallest l with 2^l >= 2^{I_inf^q(y^n)}
    Spectrum sy = spectrum_power(y, n);
    Rat iiy = Rat(sy.dim) * spectrum_iinf_level(sy, q);
    long long l = 0;
    Int two_l(1);
    while (Rat(two_l) < iiy) {
      ++l;
      two_l *= 2;
    }
    long long m = e.kind == RateExperiment::cost ? std::max(0LL, l - k)
                                                 : std::max(0LL, k - l);
    e.rows.push_back(
        {n, m, static_cast<double>(m) / static_cast<double>(n)});
  }
  return e;
}

}  // namespace nuk

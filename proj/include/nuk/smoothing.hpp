#pragma once

#include <utility>
#include <vector>

#include "nuk/distribution.hpp"

namespace nuk {

enum class Metric { trace, purified };

// Trace: (1/2) sum |x_i - y_i|.  Purified: sqrt(1 - F^2) with
// F = sum sqrt(x_i y_i).  Both contractive under stochastic maps;
// trace <= purified always.
double distance(const Distribution& x, const Distribution& y, Metric m);

// Grouped spectrum: distinct positive component values with
// multiplicities, sorted by value descending, plus the total dimension
// (which also counts zero outcomes).  This is what makes n-copy
// computations feasible: (0.9, 0.1)^(tensor 14) has 2^14 outcomes but
// only 15 levels.
struct Spectrum {
  std::vector<std::pair<Rat, Int>> levels;
  Int dim;
};

Spectrum spectrum_of(const Distribution& x);
Spectrum spectrum_power(const Distribution& x, int n);

// Smoothed quantities on grouped spectra, exact internals:
//   spectrum_h0_count:  smallest k with the top-k mass >= 1 - eps
//   spectrum_iinf_level: the water-filling cap t* (see iinf_eps)
// Both take eps as an exact rational so decision comparisons stay exact.
Int spectrum_h0_count(const Spectrum& s, const Rat& eps);
Rat spectrum_iinf_level(const Spectrum& s, const Rat& eps);
double spectrum_h0_eps(const Spectrum& s, const Rat& eps);   // log2 of count
double spectrum_i0_eps(const Spectrum& s, const Rat& eps);   // log2 dim - h0
double spectrum_iinf_eps(const Spectrum& s, const Rat& eps); // log2(dim * t*)

// Smooth max-entropy: log2 k, k the smallest integer with the top-k
// mass >= 1 - eps.  Only the trace metric has this closed form; the
// purified metric throws unsupported_metric.
double h0_eps(const Distribution& x, double eps, Metric m = Metric::trace);

// Smooth order-inf nonuniformity via water-filling: cap components at
// level t, chosen so the mass shaved off the peaks is exactly eps (the
// shave is redistributed below the cap, which trace distance permits
// for free).  t is clamped below at 1/d; if eps covers the full excess
// above 1/d the smoothed state is uniform and the value is 0.
// Returns log2 d + log2 t.
double iinf_eps(const Distribution& x, double eps, Metric m = Metric::trace);

// Optimal approximate distillation: -log2 u0 where u0 is the smallest
// abscissa with L_x(u0) = 1 - eps.  Exact curve inversion, float log.
double j0_eps(const Distribution& x, double eps, Metric m = Metric::trace);

// Minimal sharp-state nonuniformity that eps-approximately forms x.
double approx_formation(const Distribution& x, double eps);

// Certified-achievable vs optimal approximate distillation yield.
struct DistillReport {
  double achievable = 0.0; // log2 d - h0_eps: reachable by an explicit protocol
  double optimal = 0.0;    // j0_eps: the true optimum
};
DistillReport approx_distill(const Distribution& x, double eps);

enum class ConvertCheck { sufficient, necessary_violated, undetermined };

// One-sided tests for eps-approximate convertibility of x into y:
// sufficient when I_0^{eps/2}(x) >= I_inf^{eps/2}(y) (a protocol exists),
// necessary-violated when I_inf^eps(y) > I_inf(x) (no protocol can),
// undetermined otherwise.  Decisions are exact rational comparisons.
ConvertCheck approx_convert_check(const Distribution& x,
                                  const Distribution& y, double eps);

struct RateRow {
  int n = 0;
  long long m = 0;
  double ratio = 0.0; // m / n
};

struct RateExperiment {
  double epsilon = 0.0;
  int n_max = 0;
  std::vector<RateRow> rows;
  double predicted_rate = 0.0;
  enum Kind { rate, cost, yield } kind = rate;
};

// For each n <= n_max, the largest m such that converting x^(tensor n)
// into y^(tensor m) is certified achievable at total error eps
// (I_0^{eps/2} vs I_inf^{eps/2} on grouped spectra, exact comparisons).
// m_n is a lower bound on the true one-shot optimum and non-decreasing
// in n.  predicted_rate = I(x)/I(y); requires I(y) > 0.
RateExperiment asymptotic_rate_experiment(const Distribution& x,
                                          const Distribution& y, double eps,
                                          int n_max);

// Pure-bit supplement experiment: how many sharp bits must accompany
// x^(tensor n) to reach y^(tensor n) (cost regime, I(x) < I(y)), or how
// many can be skimmed off (yield regime).  Two stages, each budgeted
// eps/2 and certified at eps/4: distill k_n bits from x^(tensor n), then
// form y^(tensor n) from k_n + m_n bits.  predicted_rate = |I(y) - I(x)|.
RateExperiment asymptotic_cost_experiment(const Distribution& x,
                                          const Distribution& y, double eps,
                                          int n_max);

}  // namespace nuk

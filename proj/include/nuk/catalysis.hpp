#pragma once

#include <string>
#include <vector>

#include "nuk/conversion.hpp"
#include "nuk/distribution.hpp"

namespace nuk {

// Catalytic convertibility: x (tensor) z -> y (tensor) z for some finite
// catalyst z.  Decided through the order-p nonuniformity family: x trumps
// y iff I_p(x) >= I_p(y) for every p >= 0 (strong variant: every real p,
// with p < 0 relevant only when x has full support; if x has a zero
// component the negative orders of x are +inf and impose nothing).
//
// lambda_cat = inf_p (I_p(x) - I_p(y)) over the relevant p range, the
// catalytic analogue of the one-shot lambda.  The infimum is located on a
// fixed log-spaced grid and tightened by golden-section refinement; the
// go/no-go call uses a 1e-9 tolerance and reports when the value sits
// within it ("boundary").
struct TrumpingReport {
  bool trumps = false;
  ExtReal lambda_cat;
  ExtReal argmin_p;  // p attaining the infimum (may be 0, +inf, -inf)
  bool strong = false;
  bool boundary = false;  // |lambda_cat| <= tolerance: treat with care

  struct GridPoint {
    ExtReal p;
    ExtReal gap;  // I_p(x) - I_p(y)
  };
  std::vector<GridPoint> worst;  // three smallest gaps on the grid
};

TrumpingReport noisy_trumps(const Distribution& x, const Distribution& y);
TrumpingReport strong_noisy_trumps(const Distribution& x,
                                   const Distribution& y);

// Human-readable block: verdict, lambda_cat, argmin p, worst grid points.
std::string render_trumping_report(const TrumpingReport& r,
                                   int sig_digits = 9);

// Catalytic signed rate: lambda_cat classified as yield/cost/equivalence
// with the same monotone sandwich as the one-shot report.  The catalytic
// lambda always dominates the one-shot lambda.
CostYieldReport catalytic_cost_or_yield(const Distribution& x,
                                        const Distribution& y);

// Sharp states are useless as catalysts: returns true iff
// decide(x (tensor) s, y (tensor) s) agrees with decide(x, y).
// Theory says always true; kept as a runnable check.
bool sharp_catalyst_useless_check(const Distribution& x,
                                  const Distribution& y, const SharpSpec& s);

// Explicit catalyst check, no search: does x (tensor) z -> y (tensor) z
// hold one-shot?  Exact Lorenz comparison on the product space.
bool verify_catalyst(const Distribution& x, const Distribution& y,
                     const Distribution& z);

}  // namespace nuk

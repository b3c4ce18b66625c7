#pragma once

#include <vector>

#include "nuk/distribution.hpp"
#include "nuk/ext_real.hpp"

namespace nuk {

// Lorenz curve of x on d outcomes: piecewise-linear interpolation of the
// points (k/d, S_k) for k = 0..d, where S_k is the sum of the k largest
// components.  Concave, non-decreasing, L(0) = 0, L(1) = 1.
struct LorenzCurve {
  int d = 0;
  std::vector<Rat> S;  // S[0..d], S[0] = 0, S[d] = 1, increments non-increasing
};

LorenzCurve build_curve(const Distribution& x);

// Sum of the k largest components, k in [0, d].
Rat ky_fan(const Distribution& x, int k);

// Exact evaluation at u in [0, 1].
Rat eval_curve(const LorenzCurve& c, const Rat& u);

// Smallest u with L(u) = h, for h in [0, 1].  This is the left inverse:
// on a flat stretch at height h it returns the left endpoint.
Rat invert_curve(const LorenzCurve& c, const Rat& h);

// Height of the rescaled step function at horizontal position v in [0,1):
// d * x_sorted[floor(d v)], the slope of the Lorenz curve at interior
// points of its segments.
Rat rescaled_histogram(const Distribution& x, const Rat& v);

// Same Lorenz curve (iff equal up to padding with zeros and a common
// uniform factor).
bool noisy_equivalent(const Distribution& x, const Distribution& y);

// Decision report for "x converts to y under uniform-preserving maps".
// Invariant: go == (delta_exact >= 0) == (lambda >= 0).
struct WitnessReport {
  bool go = false;
  Rat delta_exact;    // min over k in 1..d_y-1 of L_x(k/d_y) - S_k(y)
  double delta = 0.0; // double image of delta_exact
  int failing_k = -1; // a k attaining a negative gap; -1 when go
  ExtReal lambda;     // max horizontal log-shift, see lambda_witness
  Rat two_to_lambda;  // exact 2^lambda when lambda is finite
};

// Pointwise curve comparison at the elbows of y.  Populates go, delta,
// failing_k; lambda fields are filled in as by lambda_witness.
WitnessReport noisy_majorizes(const Distribution& x, const Distribution& y);

// Largest lambda with L_x(u) >= L_y(2^lambda u) for all u in [0, 2^-lambda].
// Positive: slack (x converts to y and a sharp state of nonuniformity
// lambda on the side).  Negative: deficit.  Computed exactly as
// 2^lambda = min over elbow heights h of both curves of
// invert(L_y, h) / invert(L_x, h); always finite for valid inputs.
// When y is uniform this reduces to lambda = I_0(x), and when x is
// uniform to lambda = -I_inf(y).
WitnessReport lambda_witness(const Distribution& x, const Distribution& y);

}  // namespace nuk

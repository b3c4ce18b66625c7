#pragma once

#include <vector>

#include "nuk/channel.hpp"
#include "nuk/distribution.hpp"
#include "nuk/lorenz.hpp"

namespace nuk {

// One two-level mixing step on a d_common-dimensional vector:
// v'_i = w v_i + (1-w) v_j,  v'_j = w v_j + (1-w) v_i, other slots fixed.
// Indices are 1-based; w in [1/2, 1] so every step moves mass from the
// larger slot toward the smaller without overshooting.
struct TTransform {
  int i = 0;
  int j = 0;
  Rat w;
};

// Executable conversion witness.  Protocol for x -> y:
//   1. lift x to x (tensor) uniform(ancilla_in) on d_common outcomes,
//   2. apply pre_permutation (sorts the lifted vector non-increasingly),
//   3. apply the steps in order,
// after which the result equals the sorted lift of y to d_common, i.e.
// y (tensor) uniform(ancilla_out) up to outcome relabeling.
// pre_permutation is stored 0-based: slot k's content moves to slot
// pre_permutation[k].
struct Protocol {
  long long d_common = 0;
  long long ancilla_in = 1;
  long long ancilla_out = 1;
  std::vector<int> pre_permutation;
  std::vector<TTransform> steps;
};

// Signed one-shot conversion rate report.  lambda > 0: converting x to y
// leaves slack worth a sharp state of nonuniformity lambda; lambda < 0:
// the conversion is infeasible and |lambda| prices the deficit.  kind is
// yield / cost accordingly, equivalence when lambda is exactly zero.
// lower/upper are the monotone sandwich
//   I_0(x) - I_inf(y) <= lambda <= min(I_0(x)-I_0(y), I_inf(x)-I_inf(y)).
struct CostYieldReport {
  ExtReal lambda;
  Rat two_to_lambda;
  enum Kind { yield, cost, equivalence } kind = equivalence;
  ExtReal lower;
  ExtReal upper;
};

// Full go/no-go decision with quantitative witness (see lorenz.hpp).
WitnessReport decide(const Distribution& x, const Distribution& y);

// Constructs an executable protocol when decide says go, otherwise
// throws not_convertible.  d_common = lcm(d_x, d_y); at most
// d_common - 1 steps.
Protocol synthesize(const Distribution& x, const Distribution& y);

// Replays the protocol with exact arithmetic and checks the final vector
// against the lifted target.  Also validates the protocol shape itself
// (permutation well-formed, w in range, dims consistent).
bool verify_protocol(const Protocol& pr, const Distribution& x,
                     const Distribution& y);

// Expands the protocol into an explicit d_common x d_common doubly
// stochastic matrix (the composition of all steps after the relabeling).
Channel protocol_channel(const Protocol& pr);

// Largest sharp state extractable from x exactly: (d_x, |supp x|),
// nonuniformity I_0(x).
SharpSpec distillable(const Distribution& x);

// Smallest sharp state that converts to x exactly: nonuniformity
// I_inf(x) = log2(d_x x_max), with 2^I kept exact.
struct FormationCost {
  double value = 0.0;
  Rat two_pow;
};
FormationCost formation_cost(const Distribution& x);

// lambda = lambda_witness(x, y).lambda, classified and sandwiched.
CostYieldReport cost_or_yield(const Distribution& x, const Distribution& y);

}  // namespace nuk
